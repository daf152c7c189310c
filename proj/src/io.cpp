#include "loosesat/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "loosesat/canonical.hpp"
#include "loosesat/errors.hpp"

namespace loosesat {
namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::uint64_t number(const Token& t, std::size_t line) {
    std::uint64_t value = 0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("expected a non-negative integer, got '" + std::string(t.text) + "'", line, t.column);
    return value;
}

}  // namespace

Hypergraph3 parse_h3(std::string_view text) {
    std::optional<std::uint64_t> n, m;
    std::vector<Triple> edges;
    std::size_t line_no = 0;
    std::size_t last_line = 1, last_column = 1;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (nl == text.size()) break;
            continue;
        }
        last_line = line_no;
        last_column = tokens.front().column;
        const auto kind = tokens.front().text;
        if (kind == "p") {
            if (n) throw ParseError("duplicate header", line_no, tokens[0].column);
            if (tokens.size() != 4) throw ParseError("header must be 'p h3 <n> <m>'", line_no, tokens[0].column);
            if (tokens[1].text != "h3")
                throw ParseError("unknown format '" + std::string(tokens[1].text) + "'", line_no, tokens[1].column);
            n = number(tokens[2], line_no);
            m = number(tokens[3], line_no);
            if (*n > std::numeric_limits<Vertex>::max())
                throw ParseError("vertex count too large", line_no, tokens[2].column);
        } else if (kind == "e") {
            if (!n) throw ParseError("edge before header", line_no, tokens[0].column);
            if (tokens.size() != 4) throw ParseError("edge must be 'e <a> <b> <c>'", line_no, tokens[0].column);
            Triple t{};
            for (int i = 0; i < 3; ++i) {
                const auto v = number(tokens[i + 1], line_no);
                if (v >= *n)
                    throw DomainError("line " + std::to_string(line_no) + ", column " +
                                      std::to_string(tokens[i + 1].column) + ": vertex " + std::to_string(v) +
                                      " out of range for n = " + std::to_string(*n));
                t[i] = Vertex(v);
            }
            try {
                edges.push_back(make_triple(t[0], t[1], t[2]));
            } catch (const DomainError& e) {
                throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
            }
            if (edges.size() > *m)
                throw ParseError("more edges than the header declares", line_no, tokens[0].column);
        } else {
            throw ParseError("unknown line type '" + std::string(kind) + "'", line_no, tokens[0].column);
        }
        if (nl == text.size()) break;
    }
    if (!n) throw ParseError("missing header", std::max<std::size_t>(line_no, 1), 1);
    if (edges.size() != *m)
        throw ParseError("header declares " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()),
                         last_line, last_column);
    return Hypergraph3::build(*n, edges);
}

std::string write_h3(const Hypergraph3& g) {
    std::string out = "p h3 " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Triple& t : g.edges())
        out += "e " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + "\n";
    return out;
}

Hypergraph3 read_h3_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_h3(buf.str());
}

void write_h3_file(const std::filesystem::path& path, const Hypergraph3& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << write_h3(g);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string render_half_units(HalfUnits h) {
    const bool neg = h < 0;
    const HalfUnits a = neg ? -h : h;
    std::string s = (neg ? "-" : "") + std::to_string(a / 2);
    if (a % 2) s += ".5";
    return s;
}

Json to_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }

Json to_json(const TriangleWitness& w) {
    Json edges = Json::array();
    for (const auto& e : w.edges) {
        Json je;
        je["vertices"] = to_json(e.vertices);
        je["index"] = e.index ? Json(*e.index) : Json(nullptr);
        edges.push_back(je);
    }
    Json j;
    j["edges"] = edges;
    j["core"] = Json::array({w.core[0], w.core[1], w.core[2]});
    return j;
}

Json to_json(const SaturationCertificate& cert) {
    Json j;
    j["schema"] = kSchema;
    j["verdict"] = to_string(cert.verdict);
    if (const auto* w = std::get_if<TriangleWitness>(&cert.witness)) {
        j["triangle"] = to_json(*w);
    } else if (const auto* t = std::get_if<Triple>(&cert.witness)) {
        j["uncovered_nonedge"] = to_json(*t);
    }
    j["checked_nonedges"] = cert.checked_nonedges;
    return j;
}

Json to_json(const LemmaReport& report) {
    Json j;
    j["schema"] = kSchema;
    j["free"] = report.free;
    j["saturated"] = report.saturated;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["ran"] = c.ran;
        if (!c.ran) jc["skipped"] = c.skipped_reason;
        jc["violations"] = c.violations;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    Json vs = Json::array();
    for (const auto& v : report.violations) {
        Json jv;
        jv["lemma"] = to_string(v.lemma);
        jv["vertices"] = v.vertices;
        jv["edges"] = v.edges;
        jv["detail"] = v.detail;
        vs.push_back(jv);
    }
    j["violations"] = vs;
    return j;
}

namespace {

Json rule_totals_json(const std::array<HalfUnits, 6>& totals) {
    Json j;
    for (std::size_t i = 0; i < totals.size(); ++i) {
        Json r;
        r["half_units"] = totals[i];
        r["charge"] = render_half_units(totals[i]);
        j["D" + std::to_string(i + 1)] = r;
    }
    return j;
}

}  // namespace

Json to_json(const AuditSummary& s) {
    Json j;
    j["schema"] = kSchema;
    j["n"] = s.vertex_count;
    j["edges"] = s.edge_count;
    j["ell"] = s.ell;
    j["low"] = s.low;
    j["nonlow"] = s.nonlow;
    j["high"] = s.high;
    j["deficient"] = s.deficient;
    // Exact ratio as a string so the output does not depend on float formatting.
    j["deficient_fraction"] = std::to_string(s.deficient) + "/" + std::to_string(s.low);
    j["helpful"] = s.helpful;
    j["half_helpful"] = s.half_helpful;
    j["total_charge"] = {{"half_units", s.total_charge}, {"charge", render_half_units(s.total_charge)}};
    j["rule_flow"] = rule_totals_json(s.rule_totals);
    Json hist = Json::array();
    for (const auto& [charge, count] : s.charge_histogram)
        hist.push_back({{"half_units", charge}, {"charge", render_half_units(charge)}, {"vertices", count}});
    j["charge_histogram"] = hist;
    Json kinds;
    for (const auto& [kind, count] : s.edge_kinds) kinds[kind] = count;
    j["edge_kinds"] = kinds;
    return j;
}

Json to_json(const ChargeReport& r) {
    Json j;
    j["schema"] = kSchema;
    j["d5"] = r.d5 == D5Multiplicity::PerIncidence ? "per-incidence" : "per-neighbor";
    j["summary"] = to_json(audit_summary(r));
    j["summary"].erase("schema");

    Json vertices = Json::array();
    for (Vertex v = 0; v < r.vertex_count; ++v) {
        const auto& p = r.profiles[v];
        Json jv;
        jv["v"] = v;
        jv["class"] = r.partition.low_vertex(v) ? "L" : "M";
        jv["initial"] = r.initial[v];
        jv["final"] = r.charge[v];
        jv["charge"] = render_half_units(r.charge[v]);
        if (r.partition.low_vertex(v)) {
            jv["flatness"] = p.flatness;
            jv["supp"] = p.supp;
            jv["flat"] = p.flat_count;
            jv["rich"] = p.rich_count;
            jv["reas"] = p.reas_count;
            jv["donor"] = p.donor_count;
            jv["helpful"] = p.is_helpful;
            jv["half_helpful"] = p.is_half_helpful;
        }
        vertices.push_back(jv);
    }
    j["vertices"] = vertices;

    Json edges = Json::array();
    for (const auto& c : r.edge_classes) {
        Json je;
        je["edge"] = c.edge;
        je["kind"] = to_string(c.kind);
        if (c.hub) je["hub"] = *c.hub;
        if (c.recipient) je["recipient"] = *c.recipient;
        if (c.exceptional) je["exceptional"] = *c.exception_vertex;
        if (c.exceptional_if_two_flat) je["exceptional_if_two_flat"] = true;
        edges.push_back(je);
    }
    j["edge_classes"] = edges;
    j["deficient_after_d5"] = r.deficient_after_d5;
    j["deficient"] = r.deficient;
    return j;
}

Json to_json(const SearchOutcome& o) {
    Json j;
    j["schema"] = kSchema;
    j["n"] = o.n;
    j["min_edges"] = o.min_edges ? Json(*o.min_edges) : Json(nullptr);
    j["exhausted_upto"] = o.exhausted_upto;
    j["nodes_explored"] = o.nodes_explored;
    j["canonical_rejections"] = o.canonical_rejections;
    j["strategy"] = o.strategy;
    if (o.witness) {
        Json edges = Json::array();
        for (const Triple& t : o.witness->edges()) edges.push_back(to_json(t));
        j["witness"] = edges;
        j["canonical_form"] = to_hex(canonical_form(*o.witness));
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json stats_json(const Hypergraph3& g) {
    const std::size_t n = g.vertex_count();
    Json j;
    j["schema"] = kSchema;
    j["n"] = n;
    j["edges"] = g.edge_count();
    std::map<std::size_t, std::size_t> degrees;
    std::size_t max_deg = 0, min_deg = n ? std::numeric_limits<std::size_t>::max() : 0;
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t d = g.degree(v);
        ++degrees[d];
        max_deg = std::max(max_deg, d);
        min_deg = std::min(min_deg, d);
    }
    std::map<std::size_t, std::size_t> codegrees;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) ++codegrees[g.codegree(u, v)];
    j["min_degree"] = min_deg;
    j["max_degree"] = max_deg;
    Json dh = Json::array();
    for (const auto& [d, c] : degrees) dh.push_back({{"degree", d}, {"vertices", c}});
    j["degree_histogram"] = dh;
    Json ch = Json::array();
    for (const auto& [d, c] : codegrees) ch.push_back({{"codegree", d}, {"pairs", c}});
    j["codegree_histogram"] = ch;
    j["canonical_form"] = to_hex(canonical_form(g));
    return j;
}

}  // namespace loosesat
