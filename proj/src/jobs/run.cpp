#include <algorithm>
#include <functional>
#include <map>

#include "relcone/cech/gerbe.hpp"
#include "relcone/chain/homology.hpp"
#include "relcone/integrality/integrality.hpp"
#include "relcone/jobs/jobs.hpp"
#include "relcone/lie/alcove.hpp"
#include "relcone/simplicial/builtins.hpp"
#include "relcone/simplicial/mapping_cone.hpp"

namespace relcone::jobs {

namespace {

json groups_json(const std::map<int, AbelianGroupPresentation>& groups)
{
    json a = json::array();
    for (const auto& [n, g] : groups) {
        json entry = group_json(g);
        entry["degree"] = n;
        a.push_back(entry);
    }
    return a;
}

json cohomology_json(const CohomologyGroup& h, int q)
{
    json entry = group_json(h.group);
    entry["degree"] = q;
    entry["text"] = h.to_string();
    entry["ascii"] = h.to_ascii();
    entry["divisible_rank"] = h.divisible_rank;
    return entry;
}

json class_json(const CohomologyClass& c)
{
    return {{"degree", c.degree},
            {"group", group_json(c.group)},
            {"cocycle", integer_vector_json(c.cocycle)},
            {"coordinates", integer_vector_json(c.coordinates)},
            {"orders", integer_vector_json(c.orders)},
            {"zero", c.is_zero()}};
}

json cycle_json(const RelativeCycle& z)
{
    return {{"source", integer_vector_json(z.source)}, {"target", integer_vector_json(z.target)}};
}

json certificate_json(const IntegralityCertificate& c)
{
    json table = json::array();
    for (const auto& row : c.table)
        table.push_back({{"cycle", cycle_json(row.cycle)}, {"value", rational_json(row.value)}});
    return {{"integral", c.integral},
            {"minimal_level", c.minimal_level.get_str()},
            {"table", table},
            {"violating", c.violating ? cycle_json(*c.violating) : json(nullptr)}};
}

int top_degree(const ChainComplex& c) { return c.empty_range() ? -1 : c.max_degree(); }

json homology_job(const Node& in)
{
    in.expect_object({"space"});
    const DeltaComplex x = parse_space(in["space"]);
    const ChainComplex c = x.chain_complex();
    json cells = json::array();
    for (int d = 0; d <= x.dimension(); ++d)
        cells.push_back(x.count(d));
    return {{"groups", groups_json(homology_all(c))},
            {"cells", cells},
            {"euler_characteristic", x.euler_characteristic()}};
}

json relative_homology_job(const Node& in)
{
    in.expect_object({"map"});
    const SimplicialMap f = parse_map(in["map"]);
    const ChainMap cf = f.induced_chain_map();
    const int top = std::max(top_degree(cf.target()), top_degree(cf.source()) + 1);
    std::map<int, AbelianGroupPresentation> groups;
    for (int n = 0; n <= top; ++n)
        groups[n] = relative_homology(cf, n);
    return {{"groups", groups_json(groups)}, {"quasi_isomorphism", is_quasi_iso(cf)}};
}

json cone_compare_job(const Node& in)
{
    in.expect_object({"map"});
    const ConeComparison c = cone_comparison(parse_map(in["map"]));
    return {{"algebraic", groups_json(c.algebraic)},
            {"topological", groups_json(c.topological)},
            {"isomorphic", c.isomorphic},
            {"cone_cells", c.cone_cells},
            {"euler_cone", c.euler_cone},
            {"euler_expected", c.euler_expected}};
}

Coefficients parse_coefficients(const Node& in)
{
    if (!in.has("coefficients"))
        return Coefficients::integers();
    const Node n = in["coefficients"];
    try {
        return Coefficients::parse(n.as_string());
    } catch (const SchemaError&) {
        throw;
    } catch (const ValidationError& e) {
        n.fail(e.what());
    }
}

json cech_job(const Node& in)
{
    in.expect_object({"nerve", "cover_map", "coefficients"});
    const Coefficients coeff = parse_coefficients(in);
    json groups = json::array();
    if (in.has("nerve") == in.has("cover_map"))
        in.fail("give exactly one of \"nerve\" and \"cover_map\"");
    if (in.has("nerve")) {
        const Nerve nerve = parse_nerve(in["nerve"]);
        for (int q = 0; q <= nerve.dimension(); ++q)
            groups.push_back(cohomology_json(cech_cohomology(nerve, coeff, q), q));
        return {{"relative", false}, {"coefficients", coeff.to_string()}, {"groups", groups}};
    }
    const CoverMap m = parse_cover_map(in["cover_map"]);
    const int top = std::max(m.target().dimension(), m.source().dimension() + 1);
    for (int q = 0; q <= top; ++q)
        groups.push_back(cohomology_json(relative_cech_cohomology(m, coeff, q), q));
    return {{"relative", true}, {"coefficients", coeff.to_string()}, {"groups", groups}};
}

CechCochain angle_cochain(const Nerve& nerve, int degree, const Node& values)
{
    const RationalVector v = values.as_rational_vector();
    if (v.size() != nerve.count(degree))
        values.fail("expected " + std::to_string(nerve.count(degree)) + " values, one per " +
                    std::to_string(degree) + "-simplex");
    return CechCochain(nerve, Coefficients::angle(), degree, v);
}

json gerbe_class_job(const Node& in)
{
    in.expect_object({"nerve", "degree", "values"});
    const Nerve nerve = parse_nerve(in["nerve"]);
    const int p = in.has("degree") ? static_cast<int>(in["degree"].as_int(0, 16)) : 2;
    const AngleCocycle a(nerve, angle_cochain(nerve, p, in["values"]));
    return {{"class", class_json(bockstein_class(a))}, {"trivializable", is_trivializable(a)}};
}

json relative_gerbe_class_job(const Node& in)
{
    in.expect_object({"cover_map", "degree", "target_values", "source_values"});
    const CoverMap m = parse_cover_map(in["cover_map"]);
    const int p = in.has("degree") ? static_cast<int>(in["degree"].as_int(1, 16)) : 2;
    const RelativeAngleCocycle g(m, angle_cochain(m.target(), p, in["target_values"]),
                                 angle_cochain(m.source(), p - 1, in["source_values"]));
    return {{"class", class_json(relative_class(g))},
            {"target_class", class_json(target_part(g))},
            {"trivializable", is_trivializable(g)}};
}

json integrality_job(const Node& in)
{
    in.expect_object({"map", "degree", "source", "target"});
    const SimplicialMap f = parse_map(in["map"]);
    const int n = static_cast<int>(in["degree"].as_int(1, 16));
    const RelativeCochainPair c(f, n, in["source"].as_rational_vector(), in["target"].as_rational_vector());
    return {{"degree", n}, {"certificate", certificate_json(is_integral(c))}};
}

json bohr_sommerfeld_job(const Node& in)
{
    in.expect_object({"map", "omega"});
    const SimplicialMap f = parse_map(in["map"]);
    return {{"certificate", certificate_json(bohr_sommerfeld_check(f, in["omega"].as_rational_vector()))}};
}

json prequant_job(const Node& in)
{
    in.expect_object({"map", "omega", "eta", "level"});
    const SimplicialMap psi = parse_map(in["map"]);
    const Integer level = in.has("level") ? in["level"].as_integer() : Integer(1);
    if (level < 1)
        in["level"].fail("level must be positive");
    const PrequantizationReport r =
        prequantization_check(psi, in["omega"].as_rational_vector(), in["eta"].as_rational_vector(), level);
    return {{"level", r.level.get_str()},
            {"prequantizable", r.direct.integral},
            {"certificate", certificate_json(r.direct)},
            {"h2", group_json(r.h2)},
            {"eta_integral", r.eta_integral},
            {"shortcut_applies", r.shortcut_applies},
            {"torsion_exponent", r.torsion_exponent.get_str()}};
}

RootSystem parse_root_system(const Node& n)
{
    try {
        return parse_group(n.as_string());
    } catch (const SchemaError&) {
        throw;
    } catch (const ValidationError& e) {
        n.fail(e.what());
    }
}

json lie_prequant_job(const Node& in)
{
    in.expect_object({"group", "xi", "level", "reduce"});
    const RootSystem rs = parse_root_system(in["group"]);
    RationalVector xi = in["xi"].as_rational_vector();
    if (xi.size() != rs.ambient_dim())
        in["xi"].fail(rs.name() + " vectors have " + std::to_string(rs.ambient_dim()) + " coordinates");
    const Integer k = in.has("level") ? in["level"].as_integer() : Integer(1);
    if (k < 1)
        in["level"].fail("level must be positive");
    const bool reduce = in.has("reduce") && in["reduce"].as_bool();
    if (reduce)
        xi = reduce_to_alcove(rs, xi);
    const bool inside = alcove_vertices(rs).contains(rs, xi);
    return {{"group", rs.name()},
            {"level", k.get_str()},
            {"xi", rational_vector_json(xi)},
            {"reduced", reduce},
            {"in_alcove", inside},
            {"weight_coordinates", rational_vector_json(weight_lattice(rs).coordinates(scale(Rational(k), xi)))},
            {"prequantizable", conjugacy_prequant(rs, xi, k)}};
}

json lie_info_job(const Node& in)
{
    in.expect_object({"group"});
    const RootSystem rs = parse_root_system(in["group"]);
    const IntegerMatrix a = rs.cartan_matrix();
    json cartan = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i)
        cartan.push_back(integer_vector_json(a.row(i)));
    json vertices = json::array();
    for (const auto& v : alcove_vertices(rs).vertices)
        vertices.push_back(rational_vector_json(v));
    json simple = json::array();
    for (const auto& s : rs.simple_roots())
        simple.push_back(rational_vector_json(s));
    return {{"group", rs.name()},
            {"rank", rs.rank()},
            {"ambient_dimension", rs.ambient_dim()},
            {"simple_roots", simple},
            {"cartan_matrix", cartan},
            {"positive_roots", rs.positive_root_coordinates().size()},
            {"highest_root", rational_vector_json(rs.highest_root())},
            {"marks", integer_vector_json(rs.marks())},
            {"alcove_vertices", vertices},
            {"min_vertex_level", min_vertex_level(rs).get_str()}};
}

using Handler = std::function<json(const Node&)>;

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> table = {
        {"homology", homology_job},
        {"relative-homology", relative_homology_job},
        {"cone-compare", cone_compare_job},
        {"cech", cech_job},
        {"gerbe-class", gerbe_class_job},
        {"relative-gerbe-class", relative_gerbe_class_job},
        {"integrality", integrality_job},
        {"bohr-sommerfeld", bohr_sommerfeld_job},
        {"prequant", prequant_job},
        {"lie-prequant", lie_prequant_job},
        {"lie-info", lie_info_job},
    };
    return table;
}

} // namespace

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, _] : handlers())
            v.push_back(name);
        return v;
    }();
    return names;
}

Report run(const json& job)
{
    Report r;
    json& doc = r.document;
    doc["schema"] = report_schema;
    doc["input_digest"] = input_digest(job);
    doc["command"] = nullptr;
    auto error = [&](const char* kind, const std::string& path, const std::string& message, int code) {
        doc["status"] = "error";
        doc["error"] = {{"kind", kind}, {"path", path}, {"message", message}};
        r.exit_code = code;
    };
    try {
        const Node root(job, "");
        root.expect_object({"schema", "command", "input", "format"});
        if (root["schema"].as_string() != job_schema)
            root["schema"].fail(std::string("unsupported schema, expected \"") + job_schema + "\"");
        const Node command = root["command"];
        const auto it = handlers().find(command.as_string());
        if (it == handlers().end())
            command.fail("unknown command \"" + command.as_string() + "\"");
        doc["command"] = it->first;
        if (root.has("format")) {
            const std::string f = root["format"].as_string();
            if (f != "text" && f != "json")
                root["format"].fail("format must be \"text\" or \"json\"");
        }
        doc["result"] = it->second(root["input"]);
        doc["status"] = "ok";
        r.exit_code = exit_ok;
    } catch (const SchemaError& e) {
        error("schema", e.path().empty() ? "/" : e.path(), e.message(), exit_validation);
    } catch (const ValidationError& e) {
        error("validation", "", e.what(), exit_validation);
    } catch (const ComputationError& e) {
        error("computation", "", e.what(), exit_computation);
    } catch (const std::exception& e) {
        error("internal", "", e.what(), exit_computation);
    }
    return r;
}

json builtin_job(const std::string& name)
{
    auto resolves = [&](auto&& build) {
        try {
            build(name);
            return true;
        } catch (const ValidationError&) {
            return false;
        }
    };
    if (resolves(builtins::space))
        return {{"schema", job_schema}, {"command", "homology"}, {"input", {{"space", name}}}};
    if (resolves(builtins::map))
        return {{"schema", job_schema}, {"command", "relative-homology"}, {"input", {{"map", name}}}};
    throw ValidationError("unknown built-in \"" + name + "\"");
}

} // namespace relcone::jobs
