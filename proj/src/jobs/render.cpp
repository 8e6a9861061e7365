#include <sstream>

#include "relcone/jobs/jobs.hpp"

namespace relcone::jobs {

namespace {

std::string script(long n, bool super)
{
    static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    if (n < 0)
        return (super ? "⁻" : "₋") + script(-n, super);
    std::string digits = std::to_string(n), out;
    for (char c : digits)
        out += (super ? sup : sub)[c - '0'];
    return out;
}

std::string group_line(const json& groups, const std::string& prefix, bool super)
{
    std::string out;
    for (const auto& g : groups) {
        if (!out.empty())
            out += ", ";
        out += "H" + script(g["degree"].get<long>(), super) + prefix + " = " + g["text"].get<std::string>();
    }
    return out.empty() ? "(empty)" : out;
}

std::string vec(const json& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + v[i].get<std::string>();
    return out + ")";
}

std::string coefficient_symbol(const std::string& c)
{
    if (c == "angle")
        return "ℚ/ℤ";
    if (c == "Q")
        return "ℚ";
    return c[0] == 'Z' ? "ℤ" + c.substr(1) : c;
}

std::string yes_no(const json& b) { return b.get<bool>() ? "yes" : "no"; }

void certificate(std::ostream& os, const json& c)
{
    os << "integral: " << yes_no(c["integral"]) << "\n";
    os << "minimal level: " << c["minimal_level"].get<std::string>() << "\n";
    for (const auto& row : c["table"])
        os << "  ⟨c, " << vec(row["cycle"]["source"]) << " ⊕ " << vec(row["cycle"]["target"])
           << "⟩ = " << row["value"].get<std::string>() << "\n";
    if (!c["violating"].is_null())
        os << "violating cycle: " << vec(c["violating"]["source"]) << " ⊕ " << vec(c["violating"]["target"]) << "\n";
}

void cohomology_class(std::ostream& os, const std::string& label, const json& c)
{
    os << label << ": " << (c["zero"].get<bool>() ? "0" : vec(c["coordinates"])) << " in H"
       << script(c["degree"].get<long>(), true) << " = " << c["group"]["text"].get<std::string>() << "\n";
}

} // namespace

std::string render_text(const json& report)
{
    std::ostringstream os;
    const std::string command = report["command"].is_null() ? "job" : report["command"].get<std::string>();
    os << command << " [" << report["input_digest"].get<std::string>() << "]\n";
    if (report["status"] == "error") {
        const json& e = report["error"];
        os << e["kind"].get<std::string>() << " error";
        if (!e["path"].get<std::string>().empty())
            os << " at " << e["path"].get<std::string>();
        os << ": " << e["message"].get<std::string>() << "\n";
        return os.str();
    }
    const json& r = report["result"];
    if (command == "homology") {
        os << group_line(r["groups"], "", false) << "\n";
        os << "χ = " << r["euler_characteristic"].get<long>() << "\n";
    } else if (command == "relative-homology") {
        os << group_line(r["groups"], "(f)", false) << "\n";
        os << "quasi-isomorphism: " << yes_no(r["quasi_isomorphism"]) << "\n";
    } else if (command == "cone-compare") {
        os << "algebraic:   " << group_line(r["algebraic"], "(f)", false) << "\n";
        os << "topological: " << group_line(r["topological"], "(Cone)", false) << "\n";
        os << "isomorphic: " << yes_no(r["isomorphic"]) << " (" << r["cone_cells"].get<long>() << " cone cells)\n";
    } else if (command == "cech") {
        const std::string coeff = coefficient_symbol(r["coefficients"].get<std::string>());
        os << group_line(r["groups"], r["relative"].get<bool>() ? "(Φ; " + coeff + ")" : "(" + coeff + ")", true)
           << "\n";
    } else if (command == "gerbe-class") {
        cohomology_class(os, "class", r["class"]);
        os << "trivializable: " << yes_no(r["trivializable"]) << "\n";
    } else if (command == "relative-gerbe-class") {
        cohomology_class(os, "relative class", r["class"]);
        cohomology_class(os, "target class", r["target_class"]);
        os << "trivializable: " << yes_no(r["trivializable"]) << "\n";
    } else if (command == "integrality" || command == "bohr-sommerfeld") {
        certificate(os, r["certificate"]);
    } else if (command == "prequant") {
        os << "pre-quantizable at level " << r["level"].get<std::string>() << ": " << yes_no(r["prequantizable"])
           << "\n";
        os << "H₂(M) = " << r["h2"]["text"].get<std::string>() << "\n";
        os << "η integral on H₃(N): " << yes_no(r["eta_integral"]) << "\n";
        os << "torsion shortcut applies: " << yes_no(r["shortcut_applies"]) << "\n";
        certificate(os, r["certificate"]);
    } else if (command == "lie-prequant") {
        os << "group: " << r["group"].get<std::string>() << ", level " << r["level"].get<std::string>() << "\n";
        os << "ξ = " << vec(r["xi"]) << (r["reduced"].get<bool>() ? " (reduced)" : "") << "\n";
        os << "in alcove: " << yes_no(r["in_alcove"]) << "\n";
        os << "pre-quantizable: " << yes_no(r["prequantizable"]) << "\n";
    } else if (command == "lie-info") {
        os << "group: " << r["group"].get<std::string>() << " (rank " << r["rank"].get<long>() << ", "
           << r["positive_roots"].get<long>() << " positive roots)\n";
        os << "Cartan matrix:\n";
        for (const auto& row : r["cartan_matrix"]) {
            os << " ";
            for (const auto& x : row)
                os << " " << x.get<std::string>();
            os << "\n";
        }
        os << "marks: " << vec(r["marks"]) << "\n";
        os << "alcove vertices:\n";
        for (std::size_t j = 0; j < r["alcove_vertices"].size(); ++j)
            os << "  μ" << script(static_cast<long>(j), false) << " = " << vec(r["alcove_vertices"][j]) << "\n";
        os << "minimal vertex level: " << r["min_vertex_level"].get<std::string>() << "\n";
    }
    return os.str();
}

} // namespace relcone::jobs
