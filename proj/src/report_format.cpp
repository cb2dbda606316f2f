#include <indtree/report_format.hpp>

#include <indtree/io.hpp>

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace indtree {

using ordered_json = nlohmann::ordered_json;

namespace {
    auto fields_json(const Fields & fields) -> ordered_json
    {
        auto out = ordered_json::object();
        for (const auto & [key, value] : fields)
            out[key] = value;
        return out;
    }

    auto elapsed_json(const std::optional<double> & elapsed, bool timing) -> ordered_json
    {
        if (timing && elapsed)
            return *elapsed;
        return nullptr;
    }

    auto fields_text(const Fields & fields) -> std::string
    {
        std::string out;
        for (const auto & [key, value] : fields) {
            if (! out.empty())
                out += "  ";
            out += key + "=" + std::to_string(value);
        }
        return out;
    }
}

auto format_vertex_list(VertexSet s) -> std::string
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](Vertex v) {
        if (! first)
            out += ", ";
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

auto to_json(const EnumerationReport & report, bool timing) -> std::string
{
    ordered_json j;
    j["schema"] = report_schema_version;
    j["n"] = report.n;
    j["graphs_seen"] = report.graphs_seen;
    j["t3"] = report.t3;
    j["t3_star"] = report.t3_star;
    j["t3_star_formula"] = report.t3_star_formula;
    auto rooted = ordered_json::array();
    for (const auto & w : report.extremal_rooted)
        rooted.push_back(ordered_json{{"graph6", w.graph6}, {"root", w.root}});
    j["extremal_rooted"] = std::move(rooted);
    j["extremal_unrooted"] = report.extremal_unrooted;
    j["elapsed"] = elapsed_json(report.elapsed_seconds, timing);
    return j.dump(2);
}

auto to_json(const VerificationReport & report, bool timing) -> std::string
{
    ordered_json j;
    j["schema"] = report_schema_version;
    j["claim"] = report.claim;
    j["parameters"] = fields_json(report.parameters);
    j["instances_checked"] = report.instances_checked;
    j["status"] = report.passed ? "pass" : "fail";
    auto failures = ordered_json::array();
    for (const auto & f : report.failures) {
        ordered_json entry;
        entry["graph6"] = f.graph6;
        entry["root"] = f.root ? ordered_json(*f.root) : ordered_json(nullptr);
        entry["observed"] = fields_json(f.observed);
        entry["reason"] = f.reason;
        failures.push_back(std::move(entry));
    }
    j["failures"] = std::move(failures);
    auto rows = ordered_json::array();
    for (const auto & row : report.rows)
        rows.push_back(fields_json(row));
    j["results"] = std::move(rows);
    auto witnesses = ordered_json::array();
    for (const auto & w : report.witnesses)
        witnesses.push_back(ordered_json{{"graph6", w.graph6}, {"root", w.root}});
    j["witnesses"] = std::move(witnesses);
    j["elapsed"] = elapsed_json(report.elapsed_seconds, timing);
    return j.dump(2);
}

auto to_json(const Graph & g, const TreeSearchResult & result) -> std::string
{
    ordered_json j;
    j["schema"] = report_schema_version;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["root"] = result.required_root ? ordered_json(*result.required_root) : ordered_json(nullptr);
    j["t"] = result.size;
    j["witness"] = result.witness.to_vector();
    j["nodes"] = result.stats.nodes;
    j["prunings"] = result.stats.prunings;
    return j.dump(2);
}

auto to_text(const EnumerationReport & report, bool timing) -> std::string
{
    std::ostringstream out;
    out << "n=" << report.n << "  graphs=" << report.graphs_seen << "  t3=" << report.t3
        << "  t3*=" << report.t3_star << "  formula=" << report.t3_star_formula << '\n';
    out << "extremal rooted (" << report.extremal_rooted.size() << "):\n";
    for (const auto & w : report.extremal_rooted)
        out << "  " << w.graph6 << " root " << w.root << '\n';
    out << "extremal unrooted (" << report.extremal_unrooted.size() << "):\n";
    for (const auto & g6 : report.extremal_unrooted)
        out << "  " << g6 << '\n';
    if (timing && report.elapsed_seconds)
        out << "elapsed " << std::fixed << std::setprecision(3) << *report.elapsed_seconds << "s\n";
    return out.str();
}

auto to_text(const VerificationReport & report, bool timing) -> std::string
{
    std::ostringstream out;
    out << report.claim << ": " << (report.passed ? "PASS" : "FAIL") << "  (" << fields_text(report.parameters)
        << ", " << report.instances_checked << " instances)\n";
    for (const auto & row : report.rows)
        out << "  " << fields_text(row) << '\n';
    if (! report.witnesses.empty()) {
        out << "  extremal witnesses:\n";
        for (const auto & w : report.witnesses)
            out << "    " << w.graph6 << " root " << w.root << '\n';
    }
    for (const auto & f : report.failures) {
        out << "  counterexample " << f.graph6;
        if (f.root)
            out << " root " << *f.root;
        out << ": " << f.reason << "  [" << fields_text(f.observed) << "]\n";
    }
    if (timing && report.elapsed_seconds)
        out << "  elapsed " << std::fixed << std::setprecision(3) << *report.elapsed_seconds << "s\n";
    return out.str();
}

} // namespace indtree
