#include "zkhom/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "zkhom/error.hpp"

namespace zkhom {

using nlohmann::json;

std::string simplex_key(const Simplex& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out;
}

Simplex parse_simplex_key(const std::string& key)
{
    std::vector<Vertex> vertices;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad simplex key \"" + key + "\"");
        try {
            vertices.push_back(static_cast<Vertex>(std::stoul(part)));
        } catch (const std::exception&) {
            throw ParseError("bad simplex key \"" + key + "\"");
        }
    }
    if (vertices.empty())
        throw ParseError("empty simplex key");
    return Simplex(std::move(vertices));
}

namespace {

std::vector<std::vector<Vertex>> read_simplices(const json& list, const char* what)
{
    if (!list.is_array())
        throw ParseError(std::string(what) + " must be an array of vertex lists");
    std::vector<std::vector<Vertex>> out;
    for (const auto& s : list) {
        if (!s.is_array() || s.empty())
            throw ParseError(std::string(what) + " contains an empty or non-list simplex");
        std::vector<Vertex> vs;
        for (const auto& v : s) {
            if (!v.is_number_unsigned())
                throw ParseError(std::string(what) + " contains a non-integer vertex");
            vs.push_back(v.get<Vertex>());
        }
        out.push_back(std::move(vs));
    }
    return out;
}

std::uint32_t read_k(const json& doc)
{
    if (!doc.contains("k") || !doc["k"].is_number_unsigned() || doc["k"].get<std::uint64_t>() == 0 ||
        doc["k"].get<std::uint64_t>() > (1U << 20))
        throw ParseError("\"k\" must be a positive integer");
    return doc["k"].get<std::uint32_t>();
}

IsotropyTriple parse_triple(const json& body, std::uint32_t k)
{
    if (!body.is_object() || !body.contains("quotient") || !body.contains("S") || !body.contains("Tstar"))
        throw ParseError("triple needs \"quotient\", \"S\" and \"Tstar\"");
    IsotropyTriple t;
    t.k = k;
    t.quotient = Complex::from_generators(read_simplices(body["quotient"], "quotient"));
    for (int d = 0; d <= t.quotient.dim(); ++d)
        t.S.emplace_back(t.quotient.count(static_cast<std::size_t>(d)), Subgroup{0});

    if (!body["S"].is_object())
        throw ParseError("\"S\" must map simplex keys to subgroup orders");
    for (const auto& [key, value] : body["S"].items()) {
        const Simplex s = parse_simplex_key(key);
        const auto idx = t.quotient.find(s);
        if (!idx)
            throw ParseError("S names " + s.to_string() + ", which is not in the quotient");
        if (!value.is_number_unsigned())
            throw ParseError("subgroup order for " + key + " must be a positive integer");
        t.S[s.dim()][*idx] = Subgroup{value.get<std::uint32_t>()};
    }
    for (std::size_t d = 0; d < t.S.size(); ++d)
        for (std::size_t a = 0; a < t.S[d].size(); ++a)
            if (t.S[d][a].order == 0)
                throw ParseError("S is missing " + t.quotient.simplex(d, a).to_string());

    if (!body["Tstar"].is_object())
        throw ParseError("\"Tstar\" must map \"psi|omega\" keys to exponent lists");
    for (const auto& [key, value] : body["Tstar"].items()) {
        const auto bar = key.find('|');
        if (bar == std::string::npos)
            throw ParseError("Tstar key \"" + key + "\" lacks '|'");
        const Simplex psi = parse_simplex_key(key.substr(0, bar));
        const Simplex omega = parse_simplex_key(key.substr(bar + 1));
        if (psi.size() != omega.size() + 1)
            throw ParseError("Tstar key \"" + key + "\" is not a codimension-1 pair");
        const auto p = t.quotient.find(psi);
        const auto o = t.quotient.find(omega);
        if (!p || !o)
            throw ParseError("Tstar key \"" + key + "\" names a simplex outside the quotient");
        if (!value.is_array())
            throw ParseError("Tstar value for \"" + key + "\" must be a list of exponents");
        ExponentSet set;
        for (const auto& g : value) {
            if (!g.is_number_unsigned())
                throw ParseError("Tstar value for \"" + key + "\" contains a non-integer");
            set.push_back(g.get<Exponent>());
        }
        std::sort(set.begin(), set.end());
        t.tstar[FacePair{psi.dim(), *p, *o}] = std::move(set);
    }
    return t;
}

} // namespace

Input parse_input(const json& doc)
{
    if (!doc.is_object())
        throw ParseError("input must be a JSON object");
    if (doc.contains("triple")) {
        const json& body = doc["triple"];
        return parse_triple(body, read_k(doc.contains("k") ? doc : body));
    }
    ActionInput in;
    in.k = read_k(doc);
    if (!doc.contains("simplices"))
        throw ParseError("missing \"simplices\"");
    in.complex = Complex::from_generators(read_simplices(doc["simplices"], "simplices"));
    if (!doc.contains("generator") || !doc["generator"].is_array())
        throw ParseError("missing \"generator\" vertex permutation");
    for (const auto& v : doc["generator"]) {
        if (!v.is_number_unsigned())
            throw ParseError("generator entries must be vertex ids");
        in.generator.push_back(v.get<Vertex>());
    }
    return in;
}

Input read_input(const std::string& path)
{
    std::ifstream file(path);
    if (!file)
        throw ParseError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(file);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return parse_input(doc);
    } catch (const InvalidSimplexError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json to_json(const ActionInput& input)
{
    json simplices = json::array();
    for (const Simplex& s : input.complex.facets())
        simplices.push_back(s.vertices());
    return {{"k", input.k}, {"simplices", simplices}, {"generator", input.generator}};
}

json to_json(const CyclicAction& action)
{
    return to_json(ActionInput{action.k(), action.complex(), action.generator()});
}

json to_json(const IsotropyTriple& triple)
{
    json quotient = json::array();
    json s = json::object();
    for (int d = 0; d <= triple.quotient.dim(); ++d)
        for (std::size_t a = 0; a < triple.quotient.count(static_cast<std::size_t>(d)); ++a) {
            const Simplex& q = triple.quotient.simplex(static_cast<std::size_t>(d), a);
            quotient.push_back(q.vertices());
            s[simplex_key(q)] = triple.S[static_cast<std::size_t>(d)][a].order;
        }
    json tstar = json::object();
    for (const auto& [key, set] : triple.tstar)
        tstar[simplex_key(triple.quotient.simplex(key.d, key.psi)) + "|" +
              simplex_key(triple.quotient.simplex(key.d - 1, key.omega))] = set;
    return {{"k", triple.k}, {"triple", {{"quotient", quotient}, {"S", s}, {"Tstar", tstar}}}};
}

json to_json(const Input& input)
{
    return std::visit([](const auto& v) { return to_json(v); }, input);
}

json to_json(const CompressedResult& result)
{
    json per_dim = json::array();
    for (const auto& r : result.per_dim) {
        json lifts = json::array();
        for (const Poly& p : r.snf.lifts)
            lifts.push_back(p.to_string());
        per_dim.push_back({{"d", r.d}, {"dimC", r.dim_chains}, {"rank", r.rank}, {"snf_lifts", lifts}});
    }
    return {{"field", result.field.name()}, {"betti", result.betti}, {"per_dim", per_dim}};
}

} // namespace zkhom
