#include "relcone/jobs/payload.hpp"

#include <algorithm>
#include <regex>

#include "relcone/simplicial/builtins.hpp"

namespace relcone::jobs {

namespace {

std::string pointer_token(const std::string& key)
{
    std::string out;
    for (char c : key)
        out += c == '~' ? "~0" : c == '/' ? "~1" : std::string(1, c);
    return out;
}

} // namespace

void Node::expect_object(std::initializer_list<const char*> allowed) const
{
    if (!value().is_object())
        fail("expected an object");
    for (const auto& [key, _] : value().items())
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw SchemaError(path_ + "/" + pointer_token(key), "unknown field");
}

bool Node::has(const std::string& key) const { return value().is_object() && value().contains(key); }

Node Node::operator[](const std::string& key) const
{
    if (!value().is_object())
        fail("expected an object");
    if (!value().contains(key))
        throw SchemaError(path_ + "/" + pointer_token(key), "missing required field");
    return Node(value().at(key), path_ + "/" + pointer_token(key));
}

Node Node::at(std::size_t i) const
{
    if (!value().is_array())
        fail("expected an array");
    if (i >= value().size())
        fail("index " + std::to_string(i) + " out of range");
    return Node(value().at(i), path_ + "/" + std::to_string(i));
}

std::size_t Node::size() const
{
    if (!value().is_array())
        fail("expected an array");
    return value().size();
}

std::string Node::as_string() const
{
    if (!value().is_string())
        fail("expected a string");
    return value().get<std::string>();
}

long Node::as_int(long lo, long hi) const
{
    if (!value().is_number_integer())
        fail("expected an integer");
    const long v = value().get<long>();
    if (v < lo || v > hi)
        fail("integer " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

bool Node::as_bool() const
{
    if (!value().is_boolean())
        fail("expected a boolean");
    return value().get<bool>();
}

Integer Node::as_integer() const
{
    const Rational q = as_rational();
    if (!is_integral(q))
        fail("expected an integer, got " + q.get_str());
    return q.get_num();
}

Rational Node::as_rational() const
{
    static const std::regex pattern(R"(\s*([+-]?[0-9]+)\s*(/\s*([0-9]+))?\s*)");
    if (value().is_number_integer())
        return Rational(value().get<long>());
    if (!value().is_string())
        fail("expected an integer or a rational string \"p/q\"");
    const std::string s = value().get<std::string>();
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        fail("malformed rational \"" + s + "\"");
    const Integer num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
    const Integer den(m[3].matched ? m[3].str() : "1");
    if (den == 0)
        fail("zero denominator in \"" + s + "\"");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RationalVector Node::as_rational_vector() const
{
    RationalVector v;
    for (std::size_t i = 0; i < size(); ++i)
        v.push_back(at(i).as_rational());
    return v;
}

std::vector<std::size_t> Node::as_index_list() const
{
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < size(); ++i)
        v.push_back(static_cast<std::size_t>(at(i).as_int(0, 1L << 30)));
    return v;
}

namespace {

template <typename F>
auto wrap(const Node& n, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const ValidationError& e) {
        n.fail(e.what());
    }
}

} // namespace

DeltaComplex parse_space(const Node& n)
{
    if (n.value().is_string())
        return wrap(n, [&] { return builtins::space(n.as_string()); });
    n.expect_object({"vertices", "facets", "cells"});
    const auto vertices = static_cast<std::size_t>(n["vertices"].as_int(0, 1L << 20));
    if (n.has("facets") == n.has("cells"))
        n.fail("give exactly one of \"facets\" and \"cells\"");
    if (n.has("facets")) {
        const Node f = n["facets"];
        std::vector<std::vector<std::size_t>> facets;
        for (std::size_t i = 0; i < f.size(); ++i)
            facets.push_back(f.at(i).as_index_list());
        return wrap(n, [&] { return DeltaComplex::from_facets(vertices, facets); });
    }
    const Node c = n["cells"];
    std::vector<std::vector<std::vector<std::size_t>>> cells;
    for (std::size_t d = 0; d < c.size(); ++d) {
        cells.emplace_back();
        for (std::size_t i = 0; i < c.at(d).size(); ++i)
            cells.back().push_back(c.at(d).at(i).as_index_list());
    }
    return wrap(n, [&] { return DeltaComplex::from_face_indices(vertices, cells); });
}

SimplicialMap parse_map(const Node& n)
{
    if (n.value().is_string())
        return wrap(n, [&] { return builtins::map(n.as_string()); });
    n.expect_object({"source", "target", "vertex_map"});
    const DeltaComplex source = parse_space(n["source"]);
    const DeltaComplex target = parse_space(n["target"]);
    const auto vm = n["vertex_map"].as_index_list();
    return wrap(n, [&] { return SimplicialMap::from_vertex_map(source, target, vm); });
}

Nerve parse_nerve(const Node& n)
{
    if (n.has("simplex")) {
        n.expect_object({"simplex", "skeleton"});
        const long size = n["simplex"].as_int(1, 12);
        const long k = n.has("skeleton") ? n["skeleton"].as_int(0, size - 1) : size - 1;
        return Nerve::skeleton_of_simplex(static_cast<std::size_t>(size), static_cast<int>(k));
    }
    n.expect_object({"size", "families"});
    const auto size = static_cast<std::size_t>(n["size"].as_int(0, 1L << 16));
    const Node f = n["families"];
    std::vector<IndexTuple> families;
    for (std::size_t i = 0; i < f.size(); ++i)
        families.push_back(f.at(i).as_index_list());
    return wrap(n, [&] { return Nerve(size, families); });
}

CoverMap parse_cover_map(const Node& n)
{
    n.expect_object({"source", "target", "refinement"});
    Nerve source = parse_nerve(n["source"]);
    Nerve target = parse_nerve(n["target"]);
    const auto r = n["refinement"].as_index_list();
    return wrap(n, [&] { return CoverMap(std::move(source), std::move(target), r); });
}

json group_json(const AbelianGroupPresentation& g)
{
    json t = json::array();
    for (const auto& x : g.torsion)
        t.push_back(x.get_str());
    return {{"text", g.to_string()}, {"ascii", g.to_ascii()}, {"free_rank", g.free_rank}, {"torsion", t}};
}

json rational_json(const Rational& q) { return q.get_str(); }

json rational_vector_json(const RationalVector& v)
{
    json a = json::array();
    for (const auto& q : v)
        a.push_back(q.get_str());
    return a;
}

json integer_vector_json(const IntegerVector& v)
{
    json a = json::array();
    for (const auto& z : v)
        a.push_back(z.get_str());
    return a;
}

} // namespace relcone::jobs
