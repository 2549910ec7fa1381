#include "ihspace/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ihspace/errors.hpp"

namespace ihs {

using nlohmann::json;

namespace {

bool skippable(const std::string& line)
{
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

/// Decimal string of a nonnegative integer, nothing else.
int parse_degree(const std::string& key)
{
    if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("betti table degree '" + key + "' is not a nonnegative integer");
    return std::stoi(key);
}

BettiTableDocument betti_from_json(const json& j)
{
    if (!j.is_object())
        throw ParseError("betti table must be a JSON object");
    BettiTableDocument doc;
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("betti table needs an integer \"dim\"");
    doc.dim = j["dim"].get<int>();
    if (j.contains("reduced"))
    {
        if (!j["reduced"].is_boolean())
            throw ParseError("\"reduced\" must be a boolean");
        doc.reduced = j["reduced"].get<bool>();
    }
    if (!j.contains("betti") || !j["betti"].is_object())
        throw ParseError("betti table needs a \"betti\" object");
    for (const auto& [key, value] : j["betti"].items())
    {
        const int degree = parse_degree(key);
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long>() >= 0))
            throw ParseError("rank at degree " + key + " must be a nonnegative integer");
        if (degree > doc.dim)
            throw ParseError("degree " + key + " exceeds dim " + std::to_string(doc.dim));
        doc.betti.set(degree, value.get<std::size_t>());
    }
    if (doc.dim >= 0)
        doc.betti.set_top_degree(doc.dim);
    return doc;
}

json parse_json(const std::string& text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::vector<Simplex> parse_facets(std::istream& in)
{
    std::vector<Simplex> facets;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line))
    {
        ++number;
        if (skippable(line))
            continue;
        std::istringstream fields(line);
        std::string token;
        Simplex s;
        while (fields >> token)
        {
            if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9)
                throw ParseError("'" + token + "' is not a nonnegative vertex id", number);
            s.push_back(std::stoi(token));
        }
        facets.push_back(std::move(s));
    }
    return facets;
}

std::vector<Simplex> read_facet_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return parse_facets(in);
}

BettiTableDocument parse_betti_table(const std::string& json_text)
{
    return betti_from_json(parse_json(json_text));
}

std::string to_json(const BettiTableDocument& doc)
{
    // nlohmann's object keys sort lexicographically ("10" < "9"); build the
    // betti object by hand to keep numeric order.
    std::string betti = "{";
    bool first = true;
    for (const auto& [degree, rank] : doc.betti.ranks())
    {
        betti += (first ? "\"" : ",\"") + std::to_string(degree) + "\":" + std::to_string(rank);
        first = false;
    }
    betti += "}";
    return "{\"dim\":" + std::to_string(doc.dim) + ",\"reduced\":" + (doc.reduced ? "true" : "false") +
           ",\"betti\":" + betti + "}";
}

MVProblem parse_mv_problem(const std::string& json_text)
{
    const json j = parse_json(json_text);
    if (!j.is_object())
        throw ParseError("MV problem must be a JSON object");
    for (const char* key : {"A", "B", "intersection"})
        if (!j.contains(key))
            throw ParseError(std::string("MV problem is missing \"") + key + "\"");

    MVProblem p;
    p.betti_a = betti_from_json(j["A"]).betti;
    p.betti_b = betti_from_json(j["B"]).betti;
    p.betti_intersection = betti_from_json(j["intersection"]).betti;
    if (j.contains("ranks"))
    {
        if (!j["ranks"].is_object())
            throw ParseError("\"ranks\" must be an object");
        for (const auto& [key, value] : j["ranks"].items())
        {
            const int degree = parse_degree(key);
            if (value.is_null())
                p.intersection_ranks[degree] = std::nullopt;
            else if (value.is_number_integer() && value.get<long>() >= 0)
                p.intersection_ranks[degree] = value.get<std::size_t>();
            else
                throw ParseError("rank at degree " + key + " must be a nonnegative integer or null");
        }
    }
    return p;
}

ExactSequenceSpec parse_sequence(std::istream& in)
{
    ExactSequenceSpec spec;
    std::string line;
    std::size_t number = 0;
    bool expect_term = true;
    while (std::getline(in, line))
    {
        ++number;
        if (skippable(line))
            continue;
        std::istringstream fields(line);
        std::string kind, value, extra;
        fields >> kind >> value;
        if (kind == "term")
        {
            if (!expect_term)
                throw ParseError("expected an arrow between two terms", number);
            if (value.empty())
                throw ParseError("term needs a name or a dimension", number);
            if (value.find_first_not_of("0123456789") == std::string::npos)
                spec.terms.push_back(SequenceTerm::known(std::stoul(value)));
            else
                spec.terms.push_back(SequenceTerm::unknown(value));
            expect_term = false;
        }
        else if (kind == "arrow")
        {
            if (expect_term)
                throw ParseError("arrow must follow a term", number);
            if (value.rfind("rank=", 0) != 0)
                throw ParseError("arrow needs rank=<integer|?>", number);
            const std::string r = value.substr(5);
            SequenceArrow arrow;
            if (r != "?")
            {
                if (r.empty() || r.find_first_not_of("0123456789") != std::string::npos)
                    throw ParseError("rank '" + r + "' is not a nonnegative integer or ?", number);
                arrow.rank = std::stoul(r);
            }
            if (fields >> extra)
            {
                if (extra != "connecting")
                    throw ParseError("unexpected '" + extra + "'", number);
                arrow.connecting = true;
            }
            spec.arrows.push_back(arrow);
            expect_term = true;
        }
        else
            throw ParseError("expected 'term' or 'arrow', got '" + kind + "'", number);
    }
    if (expect_term && !spec.terms.empty())
        throw ParseError("sequence ends with an arrow", number);
    try
    {
        spec.check();
    }
    catch (const std::invalid_argument& e)
    {
        throw ParseError(e.what());
    }
    return spec;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace ihs
