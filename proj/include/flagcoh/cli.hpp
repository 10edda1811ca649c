#ifndef FLAGCOH_CLI_HPP
#define FLAGCOH_CLI_HPP

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bott.hpp"
#include "criteria.hpp"
#include "errors.hpp"
#include "resolutions.hpp"
#include "sweep.hpp"
#include "weights.hpp"

namespace flagcoh::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::int64_t kDefaultMaxCases = 100'000'000;

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

inline Int parse_int(const std::string& s, const std::string& what)
{
    Int v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc() || ptr != last)
        throw InvalidArgument(what + ": '" + s + "' is not an integer");
    return v;
}

inline std::vector<Int> parse_int_list(const std::string& s, const std::string& what)
{
    std::vector<Int> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = s.find(',', start);
        out.push_back(parse_int(s.substr(start, comma - start), what));
        if (comma == std::string::npos)
            return out;
        start = comma + 1;
    }
}

inline int to_dim(Int v, const std::string& what)
{
    if (v < 1 || v > 64)
        throw InvalidArgument(what + ": dimension " + std::to_string(v) + " out of range 1..64");
    return static_cast<int>(v);
}

/// "d1,...,dt:n"
inline FlagShape parse_flag(const std::string& s)
{
    const auto colon = s.find(':');
    if (colon == std::string::npos || s.find(':', colon + 1) != std::string::npos)
        throw InvalidArgument("--flag: expected d1,...,dt:n, got '" + s + "'");
    std::vector<int> dims;
    for (Int d : parse_int_list(s.substr(0, colon), "--flag"))
        dims.push_back(to_dim(d, "--flag"));
    dims.push_back(to_dim(parse_int(s.substr(colon + 1), "--flag"), "--flag"));
    return FlagShape(std::move(dims));
}

/// "e,d"
inline std::pair<int, int> parse_grass(const std::string& s)
{
    const auto v = parse_int_list(s, "--grass");
    if (v.size() != 2)
        throw InvalidArgument("--grass: expected e,d");
    return {to_dim(v[0], "--grass"), to_dim(v[1], "--grass")};
}

/// "a..b" or a single integer.
inline std::pair<Int, Int> parse_range(const std::string& s, const std::string& what)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const Int v = parse_int(s, what);
        return {v, v};
    }
    const Int lo = parse_int(s.substr(0, dots), what);
    const Int hi = parse_int(s.substr(dots + 2), what);
    if (lo > hi)
        throw InvalidArgument(what + ": empty range " + s);
    return {lo, hi};
}

// ---------------------------------------------------------------------------
// Scenario files
// ---------------------------------------------------------------------------

inline SplitBundle parse_summands(const FlagShape& shape, const Json& list, const std::string& field)
{
    if (!list.is_array() || list.empty())
        throw InvalidArgument("scenario: '" + field + "' must be a nonempty list of summands");
    SplitBundle b(shape);
    for (const auto& item : list) {
        if (!item.is_object())
            throw InvalidArgument("scenario: entries of '" + field + "' must be objects");
        Int mult = 1;
        std::optional<std::vector<Int>> values;
        for (const auto& [key, val] : item.items()) {
            if (key == "multiplicity") {
                if (!val.is_number_integer() || val.get<Int>() < 1)
                    throw InvalidArgument("scenario: multiplicity must be a positive integer");
                mult = val.get<Int>();
            } else if (key == "blocks" || key == "weight") {
                if (values)
                    throw InvalidArgument("scenario: give exactly one of 'blocks' or 'weight'");
                if (!val.is_array())
                    throw InvalidArgument("scenario: '" + key + "' must be a list of integers");
                std::vector<Int> v;
                for (const auto& x : val) {
                    if (!x.is_number_integer())
                        throw InvalidArgument("scenario: '" + key + "' must be a list of integers");
                    v.push_back(x.get<Int>());
                }
                if (key == "weight") {
                    const LeviWeight w(shape, v);
                    if (!w.is_block_constant())
                        throw InvalidArgument("scenario: weight " + to_string(v) + " is not a line bundle");
                    v = w.block_values();
                }
                values = std::move(v);
            } else {
                throw InvalidArgument("scenario: unknown field '" + key + "' in " + field);
            }
        }
        if (!values)
            throw InvalidArgument("scenario: summand without 'blocks' or 'weight'");
        b.add_values(*values, mult);
    }
    return b;
}

struct ScenarioFile {
    std::string name;
    Scenario scenario;
    // F was not given; End(V) is used.
    bool f_defaulted = false;
};

inline ScenarioFile parse_scenario(const Json& doc)
{
    if (!doc.is_object())
        throw InvalidArgument("scenario: top level must be an object");
    for (const auto& [key, val] : doc.items())
        if (key != "schema" && key != "name" && key != "flag" && key != "V" && key != "N" && key != "F")
            throw InvalidArgument("scenario: unknown field '" + key + "'");
    if (!doc.contains("schema") || doc["schema"] != 1)
        throw InvalidArgument("scenario: 'schema' must be 1");
    if (!doc.contains("flag") || !doc["flag"].is_string())
        throw InvalidArgument("scenario: 'flag' must be a string d1,...,dt:n");
    if (!doc.contains("V") || !doc.contains("N"))
        throw InvalidArgument("scenario: 'V' and 'N' are required");
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw InvalidArgument("scenario: 'name' must be a string");
        name = doc["name"].get<std::string>();
    }
    const FlagShape shape = parse_flag(doc["flag"].get<std::string>());
    SplitBundle v = parse_summands(shape, doc["V"], "V");
    std::variant<SplitBundle, UniversalQuotient> n = UniversalQuotient{};
    if (doc["N"].is_string()) {
        if (doc["N"] != "universal-quotient")
            throw InvalidArgument("scenario: 'N' must be a list of summands or \"universal-quotient\"");
    } else {
        n = parse_summands(shape, doc["N"], "N");
    }
    const bool defaulted = !doc.contains("F");
    SplitBundle f = defaulted ? end_split(v) : parse_summands(shape, doc["F"], "F");
    return ScenarioFile{std::move(name), make_scenario(shape, std::move(v), std::move(n), std::move(f)), defaulted};
}

inline ScenarioFile load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open scenario file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument("scenario '" + path + "': " + e.what());
    }
    return parse_scenario(doc);
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

enum class Format { Json, Csv };

/// Collects rows and a summary; rendered only once the command succeeded.
class Report {
  public:
    void row(Json r) { rows_.push_back(std::move(r)); }
    Json& summary() { return summary_; }
    const std::vector<Json>& rows() const { return rows_; }

    std::string render(Format f) const
    {
        std::ostringstream out;
        if (f == Format::Json) {
            for (const auto& r : rows_)
                out << r.dump() << '\n';
            out << Json{{"summary", summary_}}.dump() << '\n';
            return out.str();
        }
        std::vector<std::string> columns;
        for (const auto& r : rows_)
            for (const auto& [key, val] : r.items())
                if (std::find(columns.begin(), columns.end(), key) == columns.end())
                    columns.push_back(key);
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << columns[i];
        out << '\n';
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < columns.size(); ++i)
                out << (i ? "," : "") << (r.contains(columns[i]) ? csv_cell(r[columns[i]]) : "");
            out << '\n';
        }
        out << "# summary " << summary_.dump() << '\n';
        return out.str();
    }

  private:
    static std::string csv_cell(const Json& v)
    {
        if (v.is_null())
            return "";
        const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char c : s)
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }

    std::vector<Json> rows_;
    Json summary_ = Json::object();
};

inline Json json_vec(const std::vector<Int>& v)
{
    Json a = Json::array();
    for (Int x : v)
        a.push_back(x);
    return a;
}

inline std::string big(const BigInt& x) { return x.str(); }

inline void put_bott(Json& row, const CohomologyResult& r)
{
    row["zero"] = r.zero;
    row["degree"] = r.zero ? Json() : Json(r.degree);
    row["dominant_weight"] = r.zero ? Json() : json_vec(r.dominant_weight);
    row["dimension"] = big(r.dimension);
}

struct Options {
    Format format = Format::Json;
    unsigned threads = default_thread_count();
    std::int64_t max_cases = kDefaultMaxCases;
};

inline void guard_cases(std::int64_t cases, const Options& opt)
{
    if (cases > opt.max_cases)
        throw ResourceLimit("sweep would enumerate " + std::to_string(cases) + " cases, above --max-cases " +
                            std::to_string(opt.max_cases));
}

inline std::int64_t range_size(std::pair<Int, Int> r) { return r.second - r.first + 1; }

// ---------------------------------------------------------------------------
// Commands. Each returns the exit code (0 or 1) and fills the report.
// ---------------------------------------------------------------------------

inline int cmd_cohomology(const std::string& flag, const std::string& weight, Report& rep)
{
    const FlagShape shape = parse_flag(flag);
    const auto alpha = parse_int_list(weight, "--weight");
    const auto r = cohomology(LeviWeight(shape, alpha));
    Json row{{"command", "cohomology"}, {"flag", shape.to_string()}, {"weight", json_vec(alpha)}};
    put_bott(row, r);
    rep.row(std::move(row));
    rep.summary() = {{"command", "cohomology"}, {"rows", 1}, {"vanishing", r.zero ? 1 : 0},
                     {"nonvanishing", r.zero ? 0 : 1}};
    return 0;
}

inline Json hsplit_row(const FlagShape& shape, std::int64_t h, const HSplittingResult& r)
{
    return Json{{"command", "hsplit"},
                {"flag", shape.to_string()},
                {"h", h},
                {"bound", r.bound},
                {"splitting", r.splitting},
                {"witness", r.witness ? json_vec(r.witness->entries()) : Json()},
                {"witness_degree", r.witness_degree ? Json(*r.witness_degree) : Json()}};
}

inline int cmd_hsplit(const std::string& flag, std::int64_t h, std::optional<Int> bound, Report& rep)
{
    const FlagShape shape = parse_flag(flag);
    const auto r = h_splitting(shape, h, bound);
    rep.row(hsplit_row(shape, h, r));
    rep.summary() = {{"command", "hsplit"}, {"rows", 1}, {"vanishing", r.splitting ? 1 : 0},
                     {"nonvanishing", r.splitting ? 0 : 1}};
    return 0;
}

inline int cmd_claim2(const std::string& nu_s, const std::string& n_s, const std::string& k_s, const Options& opt,
                      Report& rep)
{
    const auto nu = parse_range(nu_s, "--nu-range");
    const auto n = parse_range(n_s, "--n-range");
    const auto k = parse_range(k_s, "--k-range");
    if (nu.first < 1 || n.first < 1)
        throw InvalidArgument("claim2: nu and n must be positive");
    if (nu.second + n.second > 64)
        throw InvalidArgument("claim2: nu + n must be at most 64");
    if (k.first < -1'000'000 || k.second > 1'000'000)
        throw InvalidArgument("claim2: k must lie in [-1000000, 1000000]");
    const std::int64_t cases = range_size(nu) * range_size(n) * range_size(k);
    guard_cases(cases, opt);

    const auto results = parallel_map(static_cast<std::size_t>(cases), opt.threads, [&](std::size_t i) {
        const Int kk = k.first + static_cast<Int>(i % range_size(k));
        const Int nn = n.first + static_cast<Int>((i / range_size(k)) % range_size(n));
        const Int vv = nu.first + static_cast<Int>(i / (range_size(k) * range_size(n)));
        return std::make_tuple(vv, nn, kk, claim2_vanishing(vv, nn, kk));
    });

    std::int64_t vanishing = 0, nonvanishing = 0, failures = 0;
    for (const auto& [vv, nn, kk, r] : results) {
        const bool regime = vv >= 2 && nn >= 2;
        (r.holds ? vanishing : nonvanishing)++;
        if (regime && !r.holds)
            ++failures;
        rep.row(Json{{"command", "claim2"},
                     {"nu", vv},
                     {"n", nn},
                     {"k", kk},
                     {"theorem_regime", regime},
                     {"holds", r.holds},
                     {"counterexample_m", r.counterexample_m ? Json(*r.counterexample_m) : Json()},
                     {"m_star", r.m_star},
                     {"checked_up_to", r.checked_up_to},
                     {"stable_degree", r.stable_degree ? Json(*r.stable_degree) : Json()}});
    }
    rep.summary() = {{"command", "claim2"},
                     {"rows", cases},
                     {"vanishing", vanishing},
                     {"nonvanishing", nonvanishing},
                     {"failures", failures},
                     {"status", nonvanishing == 0 ? "all vanish"
                                : failures == 0   ? "counterexamples only outside the theorem regime"
                                                  : "FAILED: counterexample in the theorem regime"}};
    return failures == 0 ? 0 : 1;
}

inline int cmd_cohom0_verify(Int max_n, const Options& opt, Report& rep)
{
    if (max_n < 2 || max_n > 20)
        throw InvalidArgument("cohom0-verify: --max-n must lie in 2..20");
    std::vector<FlagShape> shapes;
    for (int n = 2; n <= max_n; ++n) {
        auto s = flag_shapes(n);
        shapes.insert(shapes.end(), s.begin(), s.end());
    }
    guard_cases(static_cast<std::int64_t>(shapes.size()), opt);

    struct Row {
        HSplittingResult res;
        bool adjacent;
        bool witness_verified;
    };
    const auto results = parallel_map(shapes.size(), opt.threads, [&](std::size_t i) {
        Row r{h_splitting(shapes[i], 1), has_adjacent_singleton_blocks(shapes[i]), true};
        if (r.res.witness)
            r.witness_verified = cohomology(*r.res.witness).nonzero_in(1);
        return r;
    });

    std::int64_t vanishing = 0, nonvanishing = 0, disagree = 0;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const auto& r = results[i];
        const bool agree = r.res.splitting == !r.adjacent && r.witness_verified;
        (r.res.splitting ? vanishing : nonvanishing)++;
        if (!agree)
            ++disagree;
        Json row = hsplit_row(shapes[i], 1, r.res);
        row["command"] = "cohom0-verify";
        row["n"] = shapes[i].n();
        row["adjacent_singletons"] = r.adjacent;
        row["witness_verified"] = r.res.witness ? Json(r.witness_verified) : Json();
        row["agree"] = agree;
        rep.row(std::move(row));
    }
    rep.summary() = {{"command", "cohom0-verify"},
                     {"rows", static_cast<std::int64_t>(shapes.size())},
                     {"vanishing", vanishing},
                     {"nonvanishing", nonvanishing},
                     {"disagreements", disagree},
                     {"status", disagree == 0 ? "all agree" : "FAILED: disagreement"}};
    return disagree == 0 ? 0 : 1;
}

inline std::string partition_string(const Partition& p)
{
    std::string s;
    for (int i = 0; i < p.length(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

inline int cmd_resolution(Int nu, Int m, Report& rep)
{
    if (nu < 1 || nu > 40 || m < 1 || m > 200)
        throw InvalidArgument("resolution: need 1 <= nu <= 40 and 1 <= m <= 200");
    const auto be = be_complex(static_cast<int>(nu), static_cast<int>(m));
    const auto ranks = be.ranks();
    std::vector<BigInt> syz;
    if (nu >= 2)
        syz = split_sequence_terms(static_cast<int>(nu), static_cast<int>(m));
    for (std::size_t i = 0; i < be.entries().size(); ++i) {
        const auto& e = be.entries()[i];
        rep.row(Json{{"command", "resolution"},
                     {"nu", nu},
                     {"m", m},
                     {"position", e.position},
                     {"partition", partition_string(e.term.terms()[0].parts[0])},
                     {"rank", big(ranks[i])},
                     {"syzygy_rank", syz.empty() ? Json() : Json(big(syz[i]))}});
    }
    const bool euler = euler_rank_check(be);
    bool koszul = true;
    if (m == 1)
        koszul = be.ranks() == koszul_complex(static_cast<int>(nu)).ranks();
    rep.summary() = {{"command", "resolution"},
                     {"rows", static_cast<std::int64_t>(ranks.size())},
                     {"euler_rank_check", euler},
                     {"matches_koszul", m == 1 ? Json(koszul) : Json()},
                     {"status", euler && koszul ? "consistent" : "FAILED"}};
    return euler && koszul ? 0 : 1;
}

inline int cmd_chase(const std::string& grass, Int twist, Int m, Int t, Report& rep)
{
    const auto [e, d] = parse_grass(grass);
    if (e >= d)
        throw InvalidArgument("chase: need e < d");
    if (m < 1 || m > 200 || t < 0)
        throw InvalidArgument("chase: need 1 <= m <= 200 and t >= 0");
    const FlagShape shape = FlagShape::grassmannian(e, d);
    SplitBundle f(shape);
    f.add_values({twist, 0});
    const auto r = vanishing_chase(shape, f, static_cast<int>(m), static_cast<int>(t));
    std::int64_t nonzero = 0;
    for (const auto& entry : r.ledger) {
        Json row{{"command", "chase"}, {"grass", std::to_string(e) + "," + std::to_string(d)},
                 {"twist", twist},     {"m", m},
                 {"t", t},             {"j", entry.j},
                 {"group_degree", entry.degree}};
        Json bott;
        put_bott(bott, entry.bott);
        row["bott_zero"] = bott["zero"];
        row["bott_degree"] = bott["degree"];
        row["dimension_in_group_degree"] = big(entry.dimension);
        if (entry.dimension != 0)
            ++nonzero;
        rep.row(std::move(row));
    }
    rep.summary() = {{"command", "chase"},
                     {"rows", static_cast<std::int64_t>(r.ledger.size())},
                     {"vanishing", static_cast<std::int64_t>(r.ledger.size()) - nonzero},
                     {"nonvanishing", nonzero},
                     {"vanishes", r.vanishes},
                     {"status", r.vanishes ? "vanishing certified" : "not certified"}};
    return 0;
}

inline int cmd_thresholds(const std::string& path, Report& rep)
{
    const auto sf = load_scenario(path);
    const auto& sc = sf.scenario;
    const auto gate = theorem_gate(sc);
    Json base{{"command", "thresholds"}, {"scenario", path}};

    Json th = base;
    th["item"] = "thresholds";
    th["dim_x"] = gate.dim_x;
    th["nu"] = gate.nu;
    th["r"] = gate.r;
    th["f_from_end_v"] = sf.f_defaulted;
    if (const auto* n = sc.split_n(); n && n->all_ample()) {
        const auto tv = m_threshold_V(sc.v, *n);
        const auto tf = m_threshold_F(*sc.f, *n);
        th["m_V"] = tv.m;
        th["m_V_holds"] = tv.holds_at_m;
        th["m_V_holds_below"] = tv.holds_below ? Json(*tv.holds_below) : Json();
        th["m_F"] = tf.m;
        th["m_F_holds"] = tf.holds_at_m;
        th["m_F_holds_below"] = tf.holds_below ? Json(*tf.holds_below) : Json();
        th["status"] = to_string(GateStatus::Verified);
    } else {
        th["status"] = to_string(n ? GateStatus::NotVerified : GateStatus::Undecidable);
        th["note"] = n ? "N has a non-ample summand" : kQuotientNotAmple;
    }
    rep.row(std::move(th));

    std::int64_t verified = 0, other = 0;
    for (const auto& item : gate.items) {
        Json row = base;
        row["item"] = item.name;
        row["status"] = to_string(item.status);
        row["note"] = item.note;
        row["threshold"] = item.threshold ? Json(*item.threshold) : Json();
        (item.status == GateStatus::Verified ? verified : other)++;
        rep.row(std::move(row));
    }
    rep.summary() = {{"command", "thresholds"},
                     {"rows", static_cast<std::int64_t>(rep.rows().size())},
                     {"verified", verified},
                     {"not_verified_or_undecidable", other}};
    return 0;
}

inline int cmd_poset(const std::string& path, Report& rep)
{
    const auto sf = load_scenario(path);
    const auto& v = sf.scenario.v;
    const auto p = poset(v);
    for (std::size_t i = 0; i < v.class_count(); ++i) {
        Json above = Json::array();
        for (std::size_t j = 0; j < v.class_count(); ++j)
            if (p.precedes(i, j))
                above.push_back(j);
        rep.row(Json{{"command", "poset"},
                     {"scenario", path},
                     {"index", i},
                     {"blocks", json_vec(v.summands()[i].values)},
                     {"multiplicity", v.summands()[i].multiplicity},
                     {"below", std::move(above)},
                     {"maximal", std::find(p.maximal.begin(), p.maximal.end(), i) != p.maximal.end()}});
    }
    rep.summary() = {{"command", "poset"},
                     {"rows", static_cast<std::int64_t>(v.class_count())},
                     {"relations", static_cast<std::int64_t>(p.relation.size())},
                     {"maximal", static_cast<std::int64_t>(p.maximal.size())}};
    return 0;
}

inline int cmd_reduce(const std::string& grass, const std::string& flag, Report& rep)
{
    if (grass.empty() == flag.empty())
        throw InvalidArgument("reduce: give exactly one of --grass or --flag");
    if (!grass.empty()) {
        const auto [e, d] = parse_grass(grass);
        const auto chain = reduction_chain_grass(e, d);
        for (std::size_t i = 0; i < chain.size(); ++i) {
            const auto& s = chain[i];
            const bool reduce = s.kind == GrassStep::Kind::Reduce;
            rep.row(Json{{"command", "reduce"},
                         {"grass", std::to_string(e) + "," + std::to_string(d)},
                         {"step", i + 1},
                         {"kind", reduce ? "reduce" : "dual"},
                         {"from", std::to_string(s.from_e) + "," + std::to_string(s.from_d)},
                         {"to", std::to_string(s.to_e) + "," + std::to_string(s.to_d)},
                         {"n", reduce ? Json(s.n) : Json()},
                         {"nu", reduce ? Json(s.nu) : Json()},
                         {"hypotheses_hold", reduce ? s.n >= 2 && s.nu >= 2 : true},
                         {"cd_bound", reduce ? Json(cd_bound(GrassmannianDeletion{s.n, s.nu}).bound) : Json()}});
        }
        rep.summary() = {{"command", "reduce"}, {"rows", static_cast<std::int64_t>(chain.size())},
                         {"end", "2,4"}, {"status", "reached Grs(2;4)"}};
        return 0;
    }
    const FlagShape start = parse_flag(flag);
    const auto chain = reduction_chain_flag(start);
    bool ok = true;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& s = chain[i];
        const bool step_ok = s.dominates_twos && !s.adjacent_singletons && s.one_splitting;
        ok = ok && step_ok;
        rep.row(Json{{"command", "reduce"},
                     {"flag", start.to_string()},
                     {"step", i + 1},
                     {"j", s.j},
                     {"from", s.from.to_string()},
                     {"to", s.to.to_string()},
                     {"dominates_twos", s.dominates_twos},
                     {"adjacent_singletons", s.adjacent_singletons},
                     {"one_splitting", s.one_splitting},
                     {"cd_dimension", s.cd.dimension},
                     {"cd_bound", s.cd.bound},
                     {"cd_intermediate", s.cd.intermediate ? Json(*s.cd.intermediate) : Json()}});
    }
    rep.summary() = {{"command", "reduce"},
                     {"rows", static_cast<std::int64_t>(chain.size())},
                     {"end", FlagShape::twos(start.steps()).to_string()},
                     {"status", ok ? "all steps certified" : "FAILED: uncertified step"}};
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Runs one CLI invocation (args without the program name). Output goes to
/// `out` only when the command completes; exit codes: 0 pass, 1 a verified
/// claim failed, 2 input error, 3 resource limit.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bott cohomology and splitting-criteria computations on partial flag varieties", "flagcoh"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    std::string format = "json", output;
    app.add_option("--format", format, "json (JSON Lines, default) or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", opt.threads, "worker threads for sweeps")->check(CLI::Range(1u, 1024u));
    app.add_option("--max-cases", opt.max_cases, "resource guard on enumerated cases")
        ->check(CLI::PositiveNumber);
    app.add_option("--output", output, "write results to this file instead of standard output");

    std::string flag, weight, grass, nu_range, n_range, k_range, scenario;
    std::int64_t h = 1, max_n = 7, nu = 2, m = 1, t = 1, twist = 0;
    std::optional<Int> bound;

    auto* c_coh = app.add_subcommand("cohomology", "Bott cohomology of one homogeneous bundle");
    c_coh->add_option("--flag", flag, "d1,...,dt:n")->required();
    c_coh->add_option("--weight", weight, "w1,...,wn (use --weight=-1,0 for a leading minus)")->required();

    auto* c_hs = app.add_subcommand("hsplit", "decide h-splitting over the line-bundle box");
    c_hs->set_help_flag("--help", "Print this help message and exit");
    c_hs->add_option("--flag", flag, "d1,...,dt:n")->required();
    c_hs->add_option("--h", h, "top degree h")->required()->check(CLI::PositiveNumber);
    c_hs->add_option("--bound", bound, "box bound B (default n*t)");

    auto* c_c2 = app.add_subcommand("claim2", "sweep the hook-twist vanishing over (nu, n, k)");
    c_c2->add_option("--nu-range", nu_range, "a..b")->required();
    c_c2->add_option("--n-range", n_range, "a..b")->required();
    c_c2->add_option("--k-range", k_range, "a..b (use --k-range=-5..5)")->required();

    auto* c_c0 = app.add_subcommand("cohom0-verify", "compare 1-splitting with the adjacent-singleton test");
    c_c0->add_option("--max-n", max_n, "largest ambient dimension")->required();

    auto* c_res = app.add_subcommand("resolution", "ranks of the resolution of I_Y^m");
    c_res->add_option("--nu", nu, "rank of N")->required();
    c_res->add_option("--m", m, "power m")->required();

    auto* c_ch = app.add_subcommand("chase", "vanishing chase for O(k) (x) I_Y^m on a Grassmannian");
    c_ch->add_option("--grass", grass, "e,d")->required();
    c_ch->add_option("--twist", twist, "k in O(k)")->required();
    c_ch->add_option("--m", m, "power m")->required();
    c_ch->add_option("--t", t, "cohomological degree t")->required();

    auto* c_th = app.add_subcommand("thresholds", "m_V, m_F and the hypothesis report of a scenario");
    c_th->add_option("--scenario", scenario, "scenario JSON file")->required();

    auto* c_po = app.add_subcommand("poset", "isotypical poset of V in a scenario");
    c_po->add_option("--scenario", scenario, "scenario JSON file")->required();

    auto* c_rd = app.add_subcommand("reduce", "reduction chain for a Grassmannian or flag");
    c_rd->add_option("--grass", grass, "e,d");
    c_rd->add_option("--flag", flag, "d1,...,dt:n");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    opt.format = format == "csv" ? Format::Csv : Format::Json;

    Report rep;
    int code = 0;
    try {
        if (c_coh->parsed())
            code = cmd_cohomology(flag, weight, rep);
        else if (c_hs->parsed())
            code = cmd_hsplit(flag, h, bound, rep);
        else if (c_c2->parsed())
            code = cmd_claim2(nu_range, n_range, k_range, opt, rep);
        else if (c_c0->parsed())
            code = cmd_cohom0_verify(max_n, opt, rep);
        else if (c_res->parsed())
            code = cmd_resolution(nu, m, rep);
        else if (c_ch->parsed())
            code = cmd_chase(grass, twist, m, t, rep);
        else if (c_th->parsed())
            code = cmd_thresholds(scenario, rep);
        else if (c_po->parsed())
            code = cmd_poset(scenario, rep);
        else if (c_rd->parsed())
            code = cmd_reduce(grass, flag, rep);
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const InternalError& e) {
        err << "internal check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "invalid input: " << e.what() << '\n';
        return 2;
    }

    const std::string text = rep.render(opt.format);
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!(file << text)) {
            err << "cannot write '" << output << "'\n";
            return 2;
        }
    }
    return code;
}

} // namespace flagcoh::cli

#endif // FLAGCOH_CLI_HPP
