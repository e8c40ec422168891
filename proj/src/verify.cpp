#include "dunkl/verify.hpp"

#include "dunkl/dunklops.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/operators.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace dunkl {

using ojson = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---------------------------------------------------------------------------
// Corpus

ScalarField indicator(double R) {
    ScalarField f = make_real_field([R](double x) { return std::abs(x) < R ? 1.0 : 0.0; }, Parity::even);
    f.support_radius = R;
    f.smoothness = Smoothness::piecewise;
    return f;
}

ScalarField bump(int j) {
    const double s = std::exp2(j);
    ScalarField f = make_real_field(
        [s](double x) {
            const double u = s * x;
            return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
        },
        Parity::even);
    f.support_radius = 1.0 / s;
    return f;
}

double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / u);
    const double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

// ---------------------------------------------------------------------------
// Parallel rows

template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// ---------------------------------------------------------------------------
// Suite driver

struct PendingRow {
    std::string function;
    ojson params;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string group;
};

struct Checks {
    std::vector<std::string> notes;
    std::vector<std::string> failures;
    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

using Body = std::function<std::vector<PendingRow>(const SupGrid&, const QuadSpec&, Checks&)>;

enum class Mode {
    stability,  ///< pass iff every group's sup is finite and moves < 20% under refinement
    tolerance,  ///< rows are error / tolerance; pass iff every ratio <= 1
};

double row_ratio(double lhs, double rhs) {
    if (std::isnan(lhs) || std::isnan(rhs)) return kNaN;
    if (rhs == 0.0) return lhs == 0.0 ? kNaN : kInf;
    return lhs / rhs;
}

double sup_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s = std::isnan(x) ? kInf : std::max(s, x);
    return s;
}

struct Evaluated {
    std::vector<RatioRow> rows;
    std::map<std::string, double> group_sup;
    int dropped = 0;
};

Evaluated evaluate(const std::vector<PendingRow>& pending) {
    Evaluated ev;
    for (const auto& p : pending) {
        if (p.lhs == 0.0 && p.rhs == 0.0) {
            ++ev.dropped;
            continue;
        }
        RatioRow row;
        row.function = p.function;
        ojson params = p.params;
        if (!p.group.empty()) params["group"] = p.group;
        row.param_json = params.dump();
        row.lhs = p.lhs;
        row.rhs = p.rhs;
        row.ratio = row_ratio(p.lhs, p.rhs);
        auto& g = ev.group_sup[p.group];
        g = std::isnan(row.ratio) ? kInf : std::max(g, row.ratio);
        ev.rows.push_back(std::move(row));
    }
    return ev;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

RatioReport drive(const std::string& id, const Body& body, const SuiteOptions& opts, Mode mode) {
    opts.grid.validate();
    opts.quad.validate();
    RatioReport rep;
    rep.suite_id = id;
    rep.grid = opts.grid;
    rep.quad = opts.quad;
    if (opts.dry_run) {
        rep.pass = true;
        rep.notes.push_back("dry run");
        return rep;
    }
    Checks checks;
    const Evaluated base = evaluate(body(opts.grid, opts.quad, checks));
    rep.rows = base.rows;
    std::vector<double> ratios;
    for (const auto& r : rep.rows) ratios.push_back(r.ratio);
    rep.empirical_sup = sup_of(ratios);
    rep.fitted_constant = rep.empirical_sup;
    if (base.dropped > 0) checks.notes.push_back("dropped " + std::to_string(base.dropped) + " rows with 0/0");
    bool ok = std::isfinite(rep.empirical_sup) && !rep.rows.empty();
    if (rep.rows.empty()) checks.failures.push_back("no rows");
    if (mode == Mode::tolerance) {
        ok = ok && rep.empirical_sup <= 1.0;
        for (const auto& [group, s] : base.group_sup) {
            if (!(s <= 1.0)) checks.failures.push_back((group.empty() ? "sup" : group + " sup") + " " + fmt(s) + " > 1");
        }
    } else if (opts.refine) {
        Checks fine_checks;
        const Evaluated fine = evaluate(body(opts.grid.refined(), opts.quad.tightened(10.0), fine_checks));
        std::vector<double> fr;
        for (const auto& r : fine.rows) fr.push_back(r.ratio);
        rep.refined_sup = sup_of(fr);
        for (const auto& [group, s] : base.group_sup) {
            const auto it = fine.group_sup.find(group);
            const double s2 = it == fine.group_sup.end() ? kNaN : it->second;
            const double drift = std::abs(s2 - s) / s;
            const std::string label = group.empty() ? "sup" : group + " sup";
            checks.notes.push_back(label + " " + fmt(s) + " -> " + fmt(s2) + " after refinement");
            if (!(std::isfinite(s) && std::isfinite(s2) && drift < 0.2)) {
                ok = false;
                checks.failures.push_back(label + " not refinement-stable");
            }
        }
        for (const auto& f : fine_checks.failures) checks.failures.push_back("refined: " + f);
    } else {
        checks.notes.push_back("refinement skipped");
        for (const auto& [group, s] : base.group_sup) {
            if (!group.empty()) checks.notes.push_back(group + " sup " + fmt(s));
        }
    }
    rep.pass = ok && checks.failures.empty();
    rep.notes = checks.notes;
    for (const auto& f : checks.failures) rep.notes.push_back("FAIL: " + f);
    return rep;
}

ojson grid_json(const SupGrid& g) {
    return {{"r_min", g.r_min},   {"r_max", g.r_max}, {"points_per_octave", g.points_per_octave},
            {"x_min", g.x_min},   {"x_max", g.x_max}, {"x_points", g.x_points}};
}

ojson num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double from_num(const ojson& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return kInf;
        if (s == "-inf") return -kInf;
        return kNaN;
    }
    return j.get<double>();
}

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

// ---------------------------------------------------------------------------
// Shared numerics

double rel_err(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
    return out;
}

std::vector<double> dyadic(int lo, int hi) {
    std::vector<double> out;
    for (int k = lo; k <= hi; ++k) out.push_back(std::exp2(k));
    return out;
}

/// Nodes for tabulating an operator output: operator_nodes plus points
/// clustering at the input's break radii.
std::vector<double> output_nodes(const ScalarField& f) {
    std::vector<double> extra;
    for (double b : f.radial_breaks()) {
        extra.push_back(b);
        for (int k = 2; k <= 8; ++k) {
            extra.push_back(b * (1.0 - std::exp2(-k)));
            extra.push_back(b * (1.0 + std::exp2(-k)));
        }
    }
    return operator_nodes(f.parity == Parity::even, extra);
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}
std::map<std::string, TabulatedField>& cache() {
    static std::map<std::string, TabulatedField> c;
    return c;
}

std::string cache_key(const DunklParams& params, const std::string& name, const std::string& op,
                      const QuadSpec& quad) {
    std::ostringstream os;
    os.precision(17);
    os << name << '|' << op << '|' << params.alpha << '|' << quad.rel_tol << '|' << quad.abs_tol;
    return os.str();
}

TabulatedField tabulate(const std::string& key, const ScalarField& f, const std::function<double(double)>& op,
                        TabulatedField::Tail tail, int jobs) {
    {
        std::lock_guard lock(cache_mutex());
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }
    auto nodes = output_nodes(f);
    std::vector<double> values(nodes.size());
    parallel_for(nodes.size(), jobs, [&](std::size_t i) { values[i] = op(nodes[i]); });
    auto table = TabulatedField::from_values(std::move(nodes), std::move(values),
                                             f.parity == Parity::even ? Parity::even : Parity::none, tail);
    std::lock_guard lock(cache_mutex());
    cache().emplace(key, table);
    return table;
}

TabulatedField kernel_output(const DunklParams& params, const KernelSpec& kernel, const CorpusEntry& e,
                             const QuadSpec& quad, int jobs) {
    return tabulate(
        cache_key(params, e.name, kernel.describe(), quad), e.field,
        [&](double x) { return kernel_apply(params, kernel, e.field, x, quad); }, TabulatedField::Tail::power_law,
        jobs);
}

TabulatedField maximal_output(const DunklParams& params, const CorpusEntry& e, const SupGrid& grid,
                              const QuadSpec& quad) {
    const std::string key =
        cache_key(params, e.name, "maximal@" + std::to_string(grid.points_per_octave) + "," + fmt(grid.r_min) + "," +
                                      fmt(grid.r_max),
                  quad);
    {
        std::lock_guard lock(cache_mutex());
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }
    auto table = maximal_field(params, e.field, grid, quad);
    std::lock_guard lock(cache_mutex());
    cache().emplace(key, table);
    return table;
}

/// sup over the grid of phi(r)^{-1} (r^{-d} int_{B(0,r)} tau_x |g|^p dmu)^{1/p} for a tabulated g.
NormResult tabulated_gmorrey(const DunklParams& params, const TabulatedField& g, double p,
                             const GrowthFunction& phi, const SupGrid& grid, const QuadSpec& quad) {
    std::vector<double> extra;
    for (double z : g.nodes()) {
        if (z > 0.0) extra.push_back(z);
    }
    const auto table = CumulativeTable::build(params, abs_pow(g.field(), p), grid_reach(grid), quad, extra);
    return generalized_morrey_from_grid(params, ball_grid(params, table, grid, quad), p, phi, grid);
}

double tabulated_lp(const DunklParams& params, const TabulatedField& g, double p, const QuadSpec& quad) {
    std::vector<double> extra;
    for (double z : g.nodes()) {
        if (z > 0.0) extra.push_back(z);
    }
    const double top = std::abs(g.nodes().back());
    const auto table = CumulativeTable::build(params, abs_pow(g.field(), p), top, quad, extra);
    return std::pow(table.total(), 1.0 / p);
}

double l1_norm(const DunklParams& params, const ScalarField& f, const QuadSpec& quad) {
    return lp_norm(params, f, 1.0, quad);
}

/// Runs `row` for each entry (in parallel), keeping input order. Errors
/// become rows with an infinite ratio and a note.
std::vector<PendingRow> per_entry(const Corpus& corpus, int jobs, Checks& checks,
                                  const std::function<std::vector<PendingRow>(const CorpusEntry&)>& row) {
    std::vector<std::vector<PendingRow>> out(corpus.size());
    std::vector<std::string> errors(corpus.size());
    parallel_for(corpus.size(), jobs, [&](std::size_t i) {
        try {
            out[i] = row(corpus[i]);
        } catch (const std::exception& ex) {
            errors[i] = ex.what();
            PendingRow bad;
            bad.function = corpus[i].name;
            bad.lhs = kInf;
            bad.rhs = 1.0;
            out[i] = {bad};
        }
    });
    std::vector<PendingRow> rows;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!errors[i].empty()) checks.notes.push_back(corpus[i].name + ": " + errors[i]);
        for (auto& r : out[i]) rows.push_back(std::move(r));
    }
    return rows;
}

void require_condition(const std::string& id, const ConditionInputs& in, const DunklParams& params) {
    const auto rep = check_condition(id, in, params);
    if (!rep.holds) throw DomainError("precondition " + id + " does not hold");
}

void warn_condition(const std::string& id, const ConditionInputs& in, const DunklParams& params, Checks& checks,
                    const std::string& what) {
    const auto rep = check_condition(id, in, params);
    if (!rep.holds) checks.notes.push_back("warning: " + id + " fails for " + what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Corpus

bool CorpusEntry::has_tag(const std::string& tag) const {
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

Corpus default_corpus() {
    Corpus c;
    c.push_back({"gaussian", make_real_field([](double x) { return std::exp(-0.5 * x * x); }, Parity::even),
                 {"smooth"}});
    c.push_back({"chi1", indicator(1.0), {"indicator", "bmo"}});
    c.push_back({"chi4", indicator(4.0), {"indicator", "bmo"}});
    {
        ScalarField f = make_real_field(
            [](double x) {
                const double a = std::abs(x);
                return a > 0.0 && a < 1.0 ? std::pow(a, -0.25) : 0.0;
            },
            Parity::even);
        f.support_radius = 1.0;
        f.origin_exponent = -0.25;
        f.smoothness = Smoothness::singular_at_origin;
        c.push_back({"trunc_power", f, {"singular"}});
    }
    {
        ScalarField f = make_real_field(
            [](double x) {
                const double a = std::abs(x);
                return a > 0.0 ? std::log(a) * smooth_step((8.0 - a) / 4.0) : 0.0;
            },
            Parity::even);
        f.support_radius = 8.0;
        f.breakpoints = {4.0};
        f.origin_log = true;
        f.smoothness = Smoothness::singular_at_origin;
        c.push_back({"log_cut", f, {"singular", "bmo"}});
    }
    const char* names[] = {"bump_m2", "bump_m1", "bump", "bump_p1", "bump_p2"};
    for (int j = -2; j <= 2; ++j) {
        c.push_back({names[j + 2], bump(j), {"smooth", "dilates"}});
    }
    return c;
}

Corpus corpus_with_tag(const Corpus& corpus, const std::string& tag) {
    Corpus out;
    for (const auto& e : corpus) {
        if (e.has_tag(tag)) out.push_back(e);
    }
    return out;
}

Corpus corpus_subset(const Corpus& corpus, const std::vector<std::string>& names) {
    Corpus out;
    for (const auto& n : names) {
        auto it = std::find_if(corpus.begin(), corpus.end(), [&](const CorpusEntry& e) { return e.name == n; });
        if (it == corpus.end()) throw DomainError("unknown corpus function '" + n + "'");
        out.push_back(*it);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports

bool RatioReport::operator==(const RatioReport& o) const {
    const auto grid_eq = [](const SupGrid& a, const SupGrid& b) {
        return a.r_min == b.r_min && a.r_max == b.r_max && a.points_per_octave == b.points_per_octave &&
               a.x_min == b.x_min && a.x_max == b.x_max && a.x_points == b.x_points;
    };
    const auto quad_eq = [](const QuadSpec& a, const QuadSpec& b) {
        return a.rel_tol == b.rel_tol && a.abs_tol == b.abs_tol && a.max_panels == b.max_panels &&
               a.tail_cutoff == b.tail_cutoff && a.jacobi_nodes == b.jacobi_nodes;
    };
    if (suite_id != o.suite_id || pass != o.pass || notes != o.notes || rows.size() != o.rows.size()) return false;
    if (!same(empirical_sup, o.empirical_sup) || !same(fitted_constant, o.fitted_constant)) return false;
    if (refined_sup.has_value() != o.refined_sup.has_value()) return false;
    if (refined_sup && !same(*refined_sup, *o.refined_sup)) return false;
    if (!grid_eq(grid, o.grid) || !quad_eq(quad, o.quad)) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& a = rows[i];
        const auto& b = o.rows[i];
        if (a.function != b.function || a.param_json != b.param_json || !same(a.lhs, b.lhs) ||
            !same(a.rhs, b.rhs) || !same(a.ratio, b.ratio)) {
            return false;
        }
    }
    return true;
}

std::string report_to_json(const RatioReport& r) {
    ojson j;
    j["suite_id"] = r.suite_id;
    j["pass"] = r.pass;
    j["empirical_sup"] = num(r.empirical_sup);
    j["fitted_constant"] = num(r.fitted_constant);
    j["refined_sup"] = r.refined_sup ? num(*r.refined_sup) : ojson(nullptr);
    j["grid"] = grid_json(r.grid);
    j["quad"] = {{"rel_tol", r.quad.rel_tol},
                 {"abs_tol", r.quad.abs_tol},
                 {"max_panels", r.quad.max_panels},
                 {"tail_cutoff", r.quad.tail_cutoff ? ojson(*r.quad.tail_cutoff) : ojson(nullptr)},
                 {"jacobi_nodes", r.quad.jacobi_nodes}};
    j["notes"] = r.notes;
    ojson rows = ojson::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"function", row.function},
                        {"params", ojson::parse(row.param_json)},
                        {"lhs", num(row.lhs)},
                        {"rhs", num(row.rhs)},
                        {"ratio", num(row.ratio)}});
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

RatioReport report_from_json(const std::string& text) {
    RatioReport r;
    try {
        const ojson j = ojson::parse(text);
        r.suite_id = j.at("suite_id").get<std::string>();
        r.pass = j.at("pass").get<bool>();
        r.empirical_sup = from_num(j.at("empirical_sup"));
        r.fitted_constant = from_num(j.at("fitted_constant"));
        if (!j.at("refined_sup").is_null()) r.refined_sup = from_num(j.at("refined_sup"));
        const auto& g = j.at("grid");
        r.grid.r_min = g.at("r_min").get<double>();
        r.grid.r_max = g.at("r_max").get<double>();
        r.grid.points_per_octave = g.at("points_per_octave").get<int>();
        r.grid.x_min = g.at("x_min").get<double>();
        r.grid.x_max = g.at("x_max").get<double>();
        r.grid.x_points = g.at("x_points").get<int>();
        const auto& q = j.at("quad");
        r.quad.rel_tol = q.at("rel_tol").get<double>();
        r.quad.abs_tol = q.at("abs_tol").get<double>();
        r.quad.max_panels = q.at("max_panels").get<int>();
        if (!q.at("tail_cutoff").is_null()) r.quad.tail_cutoff = q.at("tail_cutoff").get<double>();
        r.quad.jacobi_nodes = q.at("jacobi_nodes").get<int>();
        r.notes = j.at("notes").get<std::vector<std::string>>();
        for (const auto& row : j.at("rows")) {
            RatioRow out;
            out.function = row.at("function").get<std::string>();
            out.param_json = row.at("params").dump();
            out.lhs = from_num(row.at("lhs"));
            out.rhs = from_num(row.at("rhs"));
            out.ratio = from_num(row.at("ratio"));
            r.rows.push_back(std::move(out));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("malformed report: ") + ex.what());
    }
    return r;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            if (any || !field.empty()) {
                record.push_back(std::move(field));
                out.push_back(std::move(record));
            }
            record.clear();
            field.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) throw DomainError("malformed CSV: unterminated quote");
    if (any || !field.empty()) {
        record.push_back(std::move(field));
        out.push_back(std::move(record));
    }
    return out;
}

double parse_csv_number(const std::string& s) {
    if (s == "nan") return kNaN;
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("malformed CSV number '" + s + "'");
    }
    if (used != s.size()) throw DomainError("malformed CSV number '" + s + "'");
    return v;
}

}  // namespace

std::string report_to_csv(const RatioReport& r) {
    std::string out = "suite_id,function,param_json,lhs,rhs,ratio\n";
    for (const auto& row : r.rows) {
        out += csv_field(r.suite_id) + ',' + csv_field(row.function) + ',' + csv_field(row.param_json) + ',' +
               csv_number(row.lhs) + ',' + csv_number(row.rhs) + ',' + csv_number(row.ratio) + '\n';
    }
    return out;
}

RatioReport report_from_csv(const std::string& text) {
    const auto records = parse_csv(text);
    if (records.empty() || records.front() != std::vector<std::string>{"suite_id", "function", "param_json", "lhs",
                                                                       "rhs", "ratio"}) {
        throw DomainError("malformed CSV: unexpected header");
    }
    RatioReport r;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& rec = records[i];
        if (rec.size() != 6) throw DomainError("malformed CSV: row " + std::to_string(i) + " has wrong field count");
        r.suite_id = rec[0];
        RatioRow row;
        row.function = rec[1];
        row.param_json = rec[2];
        row.lhs = parse_csv_number(rec[3]);
        row.rhs = parse_csv_number(rec[4]);
        row.ratio = parse_csv_number(rec[5]);
        r.rows.push_back(std::move(row));
    }
    return r;
}

QuadSpec SuiteOptions::default_suite_quad() {
    QuadSpec q;
    q.rel_tol = 1e-7;
    q.abs_tol = 1e-13;
    return q;
}

void clear_operator_cache() {
    std::lock_guard lock(cache_mutex());
    cache().clear();
}

// ---------------------------------------------------------------------------
// Special functions, transform and translation

RatioReport verify_special_functions(const SuiteOptions& opts) {
    const Body body = [](const SupGrid&, const QuadSpec&, Checks&) {
        std::vector<PendingRow> rows;
        const auto classical = make_params(-0.5);
        double e_err = 0.0;
        for (double lambda : linspace(-5.0, 5.0, 20)) {
            for (double x : linspace(-5.0, 5.0, 20)) {
                const auto e = dunkl_kernel(classical, lambda, x);
                e_err = std::max(e_err, rel_err(e, std::polar(1.0, lambda * x)));
            }
        }
        rows.push_back({"E_-1/2", {{"grid", "20x20"}, {"range", 5.0}}, e_err, 1e-10, "kernel"});
        double s_err = 0.0;
        double c_err = 0.0;
        for (double z : linspace(0.0, 10.0, 201)) {
            const double s = z == 0.0 ? 1.0 : std::sinh(z) / z;
            s_err = std::max(s_err, std::abs(bessel_j_mod(0.5, z) - s) / s);
            c_err = std::max(c_err, std::abs(bessel_j_mod(-0.5, z) - std::cosh(z)) / std::cosh(z));
        }
        rows.push_back({"J_1/2", {{"z_max", 10.0}}, s_err, 1e-12, "bessel"});
        rows.push_back({"J_-1/2", {{"z_max", 10.0}}, c_err, 1e-12, "bessel"});
        return rows;
    };
    return drive("special_functions", body, opts, Mode::tolerance);
}

namespace {

/// lambda -> F f(lambda). |F f| <= ||f||_1, so errors far below that scale
/// are noise in the oscillatory far tail of the spectrum.
std::function<std::complex<double>(double)> tolerant_spectrum(const DunklParams& params, const ScalarField& f,
                                                              const QuadSpec& quad) {
    const double scale = l1_norm(params, f, quad);
    QuadSpec spec_quad = quad;
    spec_quad.abs_tol = std::max(quad.abs_tol, 1e-13 * scale);
    return [params, f, spec_quad, scale](double l) {
        try {
            return transform_at(params, f, l, spec_quad);
        } catch (const AccuracyError& ex) {
            if (ex.error_bound() <= 1e-10 * scale) return std::complex<double>(ex.estimate());
            throw;
        }
    };
}

}  // namespace

RatioReport verify_plancherel(const std::vector<double>& alphas, const Corpus& corpus, const SuiteOptions& opts) {
    const Body body = [&](const SupGrid&, const QuadSpec& quad, Checks& checks) {
        std::vector<PendingRow> rows;
        const QuadSpec inner = quad.tightened(100.0);
        const QuadSpec outer = quad.tightened(10.0);
        for (double alpha : alphas) {
            const auto params = make_params(alpha);
            auto part = per_entry(corpus, opts.jobs, checks, [&](const CorpusEntry& e) {
                const auto spectrum = tolerant_spectrum(params, e.field, inner);
                ScalarField sq = make_real_field([&](double l) { return std::norm(spectrum(l)); }, Parity::even);
                const double lhs = std::sqrt(integrate_mu_real(params, sq, FullLine{}, {}, outer));
                const double rhs = lp_norm(params, e.field, 2.0, inner);
                ojson p = {{"alpha", alpha}, {"transform_norm", lhs}, {"norm", rhs}};
                return std::vector<PendingRow>{{e.name, p, std::abs(lhs - rhs) / rhs, 1e-6, "plancherel"}};
            });
            rows.insert(rows.end(), part.begin(), part.end());
        }
        return rows;
    };
    return drive("plancherel", body, opts, Mode::tolerance);
}

RatioReport verify_translation(const DunklParams& params, const Corpus& corpus, const SuiteOptions& opts) {
    const Body body = [&](const SupGrid&, const QuadSpec& quad, Checks& checks) {
        std::vector<PendingRow> rows;
        const QuadSpec tight = quad.tightened(1000.0);
        auto ident = per_entry(corpus, opts.jobs, checks, [&](const CorpusEntry& e) {
            double id_err = 0.0;
            for (double y : linspace(-6.0, 6.0, 49)) {
                id_err = std::max(id_err, std::abs(translate_real(params, e.field, 0.0, y, tight) - e.field.real(y)));
            }
            double sym = 0.0;
            const auto pts = linspace(-3.0, 3.0, 10);
            for (double x : pts) {
                for (double y : pts) {
                    const double a = translate_real(params, e.field, x, y, tight);
                    const double b = translate_real(params, e.field, y, x, tight);
                    sym = std::max(sym, std::abs(a - b) / std::max(1.0, std::abs(a)));
                }
            }
            return std::vector<PendingRow>{
                {e.name, {{"alpha", params.alpha}, {"check", "identity"}}, id_err, 1e-8, "identity"},
                {e.name, {{"alpha", params.alpha}, {"check", "symmetry"}}, sym, 1e-8, "symmetry"}};
        });
        rows.insert(rows.end(), ident.begin(), ident.end());
        auto bounds = per_entry(corpus, opts.jobs, checks, [&](const CorpusEntry& e) {
            std::vector<PendingRow> out;
            for (double p : {1.0, 2.0, 4.0}) {
                const bool singular = e.field.origin_exponent < 0.0;
                if (singular && p * e.field.origin_exponent + params.weight_exponent() <= -1.0) {
                    out.push_back({e.name, {{"alpha", params.alpha}, {"p", p}, {"skipped", "not in L^p"}}, 0.0, 0.0,
                                   "lp_bound"});
                    continue;
                }
                const double base = lp_norm(params, e.field, p, quad);
                for (double x : {0.0, 0.5, 1.0, 2.0, 4.0}) {
                    const ScalarField t = translated_field(params, e.field, x, quad.tightened(10.0));
                    SingularityHints hints;
                    if (x != 0.0) {
                        hints.origin_exponent = params.weight_exponent();
                        for (auto b : translation_breakpoints(params, e.field, x)) {
                            if (b.exponent < 0.0) b.exponent *= p;
                            hints.interior_points.push_back(b);
                        }
                    }
                    const double v =
                        std::pow(integrate_mu_real(params, abs_pow(t, p), FullLine{}, hints, quad), 1.0 / p);
                    out.push_back({e.name,
                                   {{"alpha", params.alpha}, {"p", p}, {"x", x}, {"norm", base}},
                                   v,
                                   4.0 * (1.0 + 1e-3) * base,
                                   "lp_bound"});
                }
            }
            return out;
        });
        rows.insert(rows.end(), bounds.begin(), bounds.end());
        // Translates of indicators.
        double range = 0.0;
        double outside = 0.0;
        double excess = 0.0;
        ojson worst = {{"alpha", params.alpha}, {"radii", {0.5, 1.0, 2.0}}};
        const auto pts = linspace(-4.0, 4.0, 17);
        for (double r : {0.5, 1.0, 2.0}) {
            const ScalarField chi = indicator(r);
            for (double x : pts) {
                for (double y : pts) {
                    const double v = translate_real(params, chi, x, y, tight);
                    range = std::max({range, -v, v - 1.0});
                    const double ax = std::abs(x);
                    const double ay = std::abs(y);
                    if (ay >= ax + r || (ax > r && ay <= ax - r)) outside = std::max(outside, std::abs(v));
                    if (ax > r && !params.classical()) {
                        const double bound = 2.0 * *params.c_alpha / (2.0 * params.alpha + 1.0) *
                                             std::pow(r / ax, 2.0 * params.alpha + 1.0);
                        if (v - bound > excess) {
                            excess = v - bound;
                            worst["x"] = x;
                            worst["y"] = y;
                            worst["r"] = r;
                            worst["value"] = v;
                            worst["bound"] = bound;
                        }
                    }
                }
            }
        }
        const ojson ip = {{"alpha", params.alpha}, {"radii", {0.5, 1.0, 2.0}}};
        rows.push_back({"indicator", ip, std::max(range, 0.0), 1e-8, "indicator_range"});
        rows.push_back({"indicator", ip, outside, 1e-8, "indicator_support"});
        if (!params.classical()) rows.push_back({"indicator", worst, excess, 1e-8, "indicator_bound"});
        return rows;
    };
    return drive("translation", body, opts, Mode::tolerance);
}

RatioReport verify_transform_identities(const DunklParams& params, const SuiteOptions& opts) {
    const Body body = [&](const SupGrid&, const QuadSpec& quad, Checks& checks) {
        std::vector<PendingRow> rows;
        const Corpus corpus = corpus_subset(default_corpus(), {"gaussian", "bump"});
        const QuadSpec tight = quad.tightened(100.0);
        const std::vector<double> lambdas{0.25, 0.75, 1.5};
        auto shift = per_entry(corpus, opts.jobs, checks, [&](const CorpusEntry& e) {
            std::vector<PendingRow> out;
            for (double x : {0.5, 1.5}) {
                const ScalarField t = translated_field(params, e.field, x, tight.tightened(10.0));
                for (double l : lambdas) {
                    const auto lhs = transform_at(params, t, l, tight);
                    const auto rhs = dunkl_kernel(params, l, x) * transform_at(params, e.field, l, tight);
                    out.push_back({e.name, {{"alpha", params.alpha}, {"x", x}, {"lambda", l}},
                                   rel_err(lhs, rhs), 1e-6, "translation"});
                }
            }
            return out;
        });
        rows.insert(rows.end(), shift.begin(), shift.end());
        const auto& g = corpus[0].field;
        for (const auto& partner : corpus) {
            const ScalarField& f = partner.field;
            ScalarField conv = make_real_field(
                [params, f, g, tight](double x) { return convolve_real(params, f, g, x, tight); }, Parity::even);
            for (double l : lambdas) {
                const auto lhs = transform_at(params, conv, l, quad.tightened(10.0));
                const auto rhs = transform_at(params, f, l, tight) * transform_at(params, g, l, tight);
                rows.push_back({partner.name + "*gaussian", {{"alpha", params.alpha}, {"lambda", l}},
                                rel_err(lhs, rhs), 1e-6, "convolution"});
            }
        }
        const auto spectrum = tolerant_spectrum(params, g, tight);
        const ScalarField spec = make_real_field([spectrum](double l) { return spectrum(l).real(); }, Parity::even);
        const auto xs = linspace(-3.0, 3.0, 13);
        // e^{-l^2/2} < 1e-31 past l = 12; beyond that only quadrature noise is left
        QuadSpec inv_quad = quad.tightened(10.0);
        inv_quad.tail_cutoff = 12.0;
        double inv = 0.0;
        for (double x : xs) {
            // an unconverged estimate counts with its error bound added
            std::complex<double> back;
            double bound = 0.0;
            try {
                back = inverse_transform(params, spec, {x}, inv_quad).front();
            } catch (const AccuracyError& ex) {
                back = ex.estimate();
                bound = ex.error_bound() / std::abs(g(x));
            }
            inv = std::max(inv, rel_err(back, g(x)) + bound);
        }
        rows.push_back({"gaussian", {{"alpha", params.alpha}, {"x_max", 3.0}}, inv, 1e-6, "inversion"});
        return rows;
    };
    return drive("transform_identities", body, opts, Mode::tolerance);
}

RatioReport verify_kernel_norms(const DunklParams& params, double beta, double gamma, double t,
                                const SuiteOptions& opts) {
    const KernelSpec kernel = KernelSpec::bessel_riesz(params, beta, gamma);
    const Body body = [&](const SupGrid&, const QuadSpec& quad, Checks& checks) {
        std::vector<PendingRow> rows;
        const double d = params.d_alpha;
        const double norm = kernel_lt_norm_quadrature(kernel, t, quad.tightened(100.0));
        // int |K|^t dmu = 2A B(a, gamma t - a) with a = (beta - d) t + d.
        const double a = (beta - d) * t + d;
        const double b = gamma * t - a;
        const double oracle =
            std::pow(2.0 * params.A_alpha * gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b), 1.0 / t);
        const ojson kp = {{"alpha", params.alpha}, {"beta", beta}, {"gamma", gamma}, {"t", t}};
        ojson qp = kp;
        qp["norm"] = norm;
        qp["oracle"] = oracle;
        rows.push_back({"kernel", qp, std::abs(norm - oracle), 1e-6, "quadrature"});
        std::vector<double> Rs = dyadic(-4, 4);
        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> u(-4.0, 4.0);
        for (int i = 0; i < 10; ++i) Rs.push_back(std::exp2(u(rng)));
        double lo = kInf;
        double hi = 0.0;
        for (double R : Rs) {
            const auto s = kernel_lt_norm_dyadic_auto(kernel, t, R);
            const auto s2 = kernel_lt_norm_dyadic_auto(kernel, t, 2.0 * R);
            const auto shifted = kernel_lt_norm_dyadic(kernel, t, 2.0 * R, s.k_min - 1, s.k_max - 1);
            ojson rp = kp;
            rp["R"] = R;
            rows.push_back({"kernel", rp, std::abs(shifted.sum - s.sum) / s.sum, 1e-10, "reindex"});
            rows.push_back({"kernel", rp, std::abs(s2.sum - s.sum) / s.sum, 1e-10, "doubling"});
            const double ratio = s.value / norm;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        ojson bp = kp;
        bp["bracket_lo"] = lo;
        bp["bracket_hi"] = hi;
        rows.push_back({"kernel", bp, hi / lo - 1.0, 0.1, "bracket"});
        checks.notes.push_back("dyadic/quadrature bracket [" + fmt(lo) + ", " + fmt(hi) + "]");
        return rows;
    };
    return drive("kernel_norms", body, opts, Mode::tolerance);
}

// ---------------------------------------------------------------------------
// Maximal function

RatioReport verify_maximal_strong(const DunklParams& params, double p, const Corpus& corpus,
                                  const SuiteOptions& opts) {
    if (!(p > 1.0)) throw DomainError("maximal strong type needs p > 1");
    const Body body = [&](const SupGrid& grid, const QuadSpec& quad, Checks& checks) {
        return per_entry(corpus, opts.jobs, checks, [&](const CorpusEntry& e) {
            const auto mf = maximal_output(params, e, grid, quad);
            const double lhs = tabulated_lp(params, mf, p, quad);
            const double rhs = lp_norm(params, e.field, p, quad);
            return std::vector<PendingRow>{{e.name, {{"alpha", params.alpha}, {"p", p}}, lhs, rhs, "strong"}};
        });
    };
    return drive("maximal_strong", body, opts, Mode::stability);
}

RatioReport verify_maximal_weak(const DunklParams& params, const Corpus& corpus, const SuiteOptions& opts) {
    const Body body = [&](const SupGrid& grid, const QuadSpec& quad, Checks& checks) {
        return per_entry(corpus, opts.jobs, checks, [&](const CorpusEntry& e) {
            const auto mf = maximal_output(params, e, grid, quad);
            const double norm1 = l1_norm(params, e.field, quad);
            // Dense samples of |x| -> M f(x).
            std::vector<double> xs{0.0};
            for (int k = 0; k <= 22 * 32; ++k) xs.push_back(std::exp2(-10.0 + k / 32.0));
            std::vector<double> v;
            for (double x : xs) v.push_back(mf(x));
            const bool even = mf.parity() == Parity::even;
            std::vector<double> vneg;
            if (!even) {
                for (double x : xs) vneg.push_back(mf(-x));
            }
            const double b = params.b_alpha;
            const double d = params.d_alpha;
            const auto level_measure = [&](const std::vector<double>& vals, double s) {
                double m = 0.0;
                for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
                    const double a0 = xs[i];
                    const double a1 = xs[i + 1];
                    const double v0 = vals[i] - s;
                    const double v1 = vals[i + 1] - s;
                    double lo = a0;
                    double hi = a1;
                    if (v0 <= 0.0 && v1 <= 0.0) continue;
                    if (v0 <= 0.0) lo = a0 + (a1 - a0) * (-v0) / (v1 - v0);
                    if (v1 <= 0.0) hi = a0 + (a1 - a0) * v0 / (v0 - v1);
                    m += 0.5 * b * (std::pow(hi, d) - std::pow(lo, d));
                }
                return m;
            };
            std::vector<PendingRow> out;
            for (int k = -4; k <= 4; ++k) {
                const double s = std::exp2(k);
                double mu = level_measure(v, s);
                mu += even ? mu : level_measure(vneg, s);
                out.push_back({e.name, {{"alpha", params.alpha}, {"s", s}}, s * mu, norm1, "weak"});
            }
            return out;
        });
    };
    return drive("maximal_weak", body, opts, Mode::stability);
}

RatioReport verify_maximal_morrey(const DunklParams& params, double p, const GrowthFunction& phi,
                                  const Corpus& corpus, const SuiteOptions& opts) {
    if (!(p > 1.0)) throw DomainError("maximal Morrey bound needs 1 < p < infinity");
    const Body body = [&](const SupGrid& grid, const QuadSpec& quad, Checks& checks) {
        ConditionInputs in;
        in.subject = phi;
        warn_condition("almost_decreasing", in, params, checks, "phi");
        if (phi.family() != GrowthFunction::Family::tabulated) {
            // r^{d/p} phi(r) should be almost increasing.
            const double e = phi.exponent() + params.d_alpha / p;
            in.subject = phi.family() == GrowthFunction::Family::power
                             ? GrowthFunction::power(phi.coefficient(), e)
                             : GrowthFunction::power_log(phi.coefficient(), e, phi.log_power());
            warn_condition("almost_increasing", in, params, checks, "r^{d/p} phi");
        }
        return per_entry(corpus, opts.jobs, checks, [&](const CorpusEntry& e) {
            const auto mf = maximal_output(params, e, grid, quad);
            const auto lhs = tabulated_gmorrey(params, mf, p, phi, grid, quad);
            const auto rhs = generalized_morrey_norm(params, e.field, p, phi, grid, quad);
            return std::vector<PendingRow>{{e.name,
                                            {{"alpha", params.alpha},
                                             {"p", p},
                                             {"phi", phi.descriptor()},
                                             {"arg_r", lhs.arg_r},
                                             {"arg_x", lhs.arg_x}},
                                            lhs.value,
                                            rhs.value,
                                            "morrey"}};
        });
    };
    return drive("maximal_morrey", body, opts, Mode::stability);
}

// ---------------------------------------------------------------------------
// Bessel-Riesz

namespace {

void check_kernel_window(const DunklParams& params, const BesselRieszSetup& s) {
    const double d = params.d_alpha;
    if (!(s.beta > 0.0 && s.beta < d)) throw DomainError("window violated: 0 < beta < d");
    if (!(s.gamma > 0.0)) throw DomainError("window violated: gamma > 0");
    if (!(s.p > 1.0)) throw DomainError("window violated: 1 < p");
    if (!(s.nu < -s.beta)) throw DomainError("window violated: nu < -beta");
}

void check_t_window(const DunklParams& params, const BesselRieszSetup& s, double t, const char* name) {
    const double d = params.d_alpha;
    const double lo = d / (d + s.gamma - s.beta);
    const double hi = d / (d - s.beta);
    if (!(t > lo && t < hi)) {
        throw DomainError(std::string("window violated: d/(d+gamma-beta) < ") + name + " < d/(d-beta)");
    }
}

GrowthFunction phi_of(const BesselRieszSetup& s) { return GrowthFunction::power(1.0, s.nu); }

BesselRieszExponents exponents_from_q(const BesselRieszSetup& s, double q, double t_prime) {
    if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("window violated: q must be positive");
    BesselRieszExponents ex;
    ex.q = q;
    ex.t_prime = t_prime;
    ex.phi = phi_of(s);
    ex.psi = ex.phi.powered(s.p / q);
    return ex;
}

struct OperatorRows {
    std::string id;
    KernelSpec kernel;
    double p;
    double q;
    GrowthFunction phi;
    GrowthFunction psi;
    double kernel_norm;  ///< multiplies the right-hand side (1 for pure operator ratios)
    std::string kernel_norm_name;
};

std::vector<PendingRow> operator_rows(const DunklParams& params, const OperatorRows& o, const Corpus& corpus,
                                      const SupGrid& grid, const QuadSpec& quad, int jobs, Checks& checks) {
    return per_entry(corpus, 1, checks, [&](const CorpusEntry& e) {
        const auto out = kernel_output(params, o.kernel, e, quad, jobs);
        const auto lhs = tabulated_gmorrey(params, out, o.q, o.psi, grid, quad);
        const auto rhs = generalized_morrey_norm(params, e.field, o.p, o.phi, grid, quad);
        ojson par = {{"alpha", params.alpha},
                     {"kernel", o.kernel.describe()},
                     {"p", o.p},
                     {"q", o.q},
                     {"phi", o.phi.descriptor()},
                     {"psi", o.psi.descriptor()}};
        if (!o.kernel_norm_name.empty()) par[o.kernel_norm_name] = o.kernel_norm;
        par["lhs_arg_r"] = lhs.arg_r;
        par["lhs_arg_x"] = lhs.arg_x;
        return std::vector<PendingRow>{{e.name, par, lhs.value, o.kernel_norm * rhs.value, o.id}};
    });
}

}  // namespace

BesselRieszExponents bessel_riesz_t_exponents(const DunklParams& params, const BesselRieszSetup& s) {
    check_kernel_window(params, s);
    check_t_window(params, s, s.t, "t");
    const double tp = s.t / (s.t - 1.0);
    const double denom = s.nu * tp + params.d_alpha;
    if (!(denom < 0.0)) throw DomainError("window violated: nu t' + d < 0");
    return exponents_from_q(s, s.nu * tp * s.p / denom, tp);
}

BesselRieszExponents bessel_riesz_st_exponents(const DunklParams& params, const BesselRieszSetup& s) {
    auto ex = bessel_riesz_t_exponents(params, s);
    check_t_window(params, s, s.s, "s");
    if (!(s.s >= 1.0 && s.s <= s.t)) throw DomainError("window violated: 1 <= s <= t");
    return ex;
}

BesselRieszExponents bessel_riesz_omega_exponents(const DunklParams& params, const BesselRieszSetup& s) {
    check_kernel_window(params, s);
    const double d = params.d_alpha;
    if (!(-s.beta < -d - s.nu)) throw DomainError("window violated: -beta < -d - nu");
    check_t_window(params, s, s.s, "s");
    if (!(s.s >= 1.0)) throw DomainError("window violated: s >= 1");
    ConditionInputs in;
    in.omega = s.omega;
    in.beta = s.beta;
    if (!check_condition("omega_bracket", in, params).holds) {
        throw DomainError("window violated: C' r^{beta-d} <= omega(r) <= C r^{-beta}");
    }
    in.subject = s.omega;
    if (!check_condition("doubling_3_3a", in, params).holds) throw DomainError("window violated: omega doubling");
    const double denom = s.nu + d - s.beta;
    return exponents_from_q(s, s.nu * s.p / denom, 0.0);
}

namespace {

std::vector<PendingRow> bessel_riesz_body(const DunklParams& params, const BesselRieszSetup& s,
                                          const BesselRieszExponents& ex, double kernel_norm,
                                          const std::string& norm_name, const std::string& id,
                                          const Corpus& corpus, const SupGrid& grid, const QuadSpec& quad, int jobs,
                                          Checks& checks) {
    ConditionInputs in;
    in.subject = ex.phi;
    in.nu = s.nu;
    if (!check_condition("phi_pointwise_power_bound", in, params).holds) {
        throw DomainError("precondition phi_pointwise_power_bound does not hold");
    }
    checks.notes.push_back("q = " + fmt(ex.q) + (ex.t_prime > 0.0 ? ", t' = " + fmt(ex.t_prime) : "") +
                           ", psi = " + ex.psi.descriptor());
    const OperatorRows o{id, KernelSpec::bessel_riesz(params, s.beta, s.gamma), s.p, ex.q, ex.phi, ex.psi,
                         kernel_norm, norm_name};
    return operator_rows(params, o, corpus, grid, quad, jobs, checks);
}

}  // namespace

RatioReport verify_bessel_riesz_t(const DunklParams& params, const BesselRieszSetup& s, const Corpus& corpus,
                                  const SuiteOptions& opts) {
    const auto ex = bessel_riesz_t_exponents(params, s);
    const KernelSpec kernel = KernelSpec::bessel_riesz(params, s.beta, s.gamma);
    const Body body = [&](const SupGrid& grid, const QuadSpec& quad, Checks& checks) {
        const double kn = kernel_lt_norm_quadrature(kernel, s.t, quad);
        return bessel_riesz_body(params, s, ex, kn, "kernel_lt_norm", "lt", corpus, grid, quad, opts.jobs, checks);
    };
    return drive("bessel_riesz_t", body, opts, Mode::stability);
}

RatioReport verify_bessel_riesz_st(const DunklParams& params, const BesselRieszSetup& s, const Corpus& corpus,
                                   const SuiteOptions& opts) {
    const auto ex = bessel_riesz_st_exponents(params, s);
    const KernelSpec kernel = KernelSpec::bessel_riesz(params, s.beta, s.gamma);
    const Body body = [&](const SupGrid& grid, const QuadSpec& quad, Checks& checks) {
        const double kt = kernel_lt_norm_quadrature(kernel, s.t, quad);
        const double kst = kernel_morrey_st_norm(kernel, s.s, s.t, grid, quad);
        checks.notes.push_back("kernel norms: L^t " + fmt(kt) + ", L^{s,t} " + fmt(kst));
        checks.require(kst <= kt * (1.0 + 1e-2), "kernel Morrey norm exceeds the L^t norm");
        return bessel_riesz_body(params, s, ex, kst, "kernel_st_norm", "st", corpus, grid, quad, opts.jobs, checks);
    };
    return drive("bessel_riesz_st", body, opts, Mode::stability);
}

RatioReport verify_bessel_riesz_omega(const DunklParams& params, const BesselRieszSetup& s, const Corpus& corpus,
                                      const SuiteOptions& opts) {
    const auto ex = bessel_riesz_omega_exponents(params, s);
    const KernelSpec kernel = KernelSpec::bessel_riesz(params, s.beta, s.gamma);
    const Body body = [&](const SupGrid& grid, const QuadSpec& quad, Checks& checks) {
        const double kw = kernel_morrey_omega_norm(kernel, s.s, s.omega, grid, quad);
        checks.notes.push_back("kernel omega-Morrey norm " + fmt(kw));
        return bessel_riesz_body(params, s, ex, kw, "kernel_omega_norm", "omega", corpus, grid, quad, opts.jobs,
                                 checks);
    };
    return drive("bessel_riesz_omega", body, opts, Mode::stability);
}

// ---------------------------------------------------------------------------
// Generalized operators

double generalized_q(const DunklParams& params, const GrowthFunction& phi, const GeneralizedSetup& s) {
    if (s.q) return *s.q;
    if (phi.family() != GrowthFunction::Family::power || s.rho.family() != GrowthFunction::Family::power) {
        throw DomainError("q must be given unless phi and rho are pure powers");
    }
    const double nu = phi.exponent();
    double beta = s.rho.exponent();
    if (s.which == "bessel_riesz_eq34") {
        beta += params.d_alpha;
        return nu * s.p / (nu + beta - s.gamma);
    }
    return nu * s.p / (nu + beta);
}

RatioReport verify_generalized_ops(const DunklParams& params, const GeneralizedSetup& s, const Corpus& corpus,
                                   const SuiteOptions& opts) {
    const bool eq34 = s.which == "bessel_riesz_eq34";
    if (!eq34 && s.which != "fractional_eq38") {
        throw DomainError("unknown operator '" + s.which + "' (bessel_riesz_eq34 or fractional_eq38)");
    }
    const double q = generalized_q(params, s.phi, s);
    if (!(s.p > 1.0 && q > s.p && std::isfinite(q))) throw DomainError("window violated: 1 < p < q");
    ConditionInputs in;
    in.phi = s.phi;
    in.p = s.p;
    in.q = q;
    in.gamma = s.gamma;
    if (eq34) {
        in.rho_tilde = s.rho;
        require_condition("eq37", in, params);
        if (!(s.gamma > 0.0)) throw DomainError("window violated: gamma > 0");
    } else {
        in.rho = s.rho;
        require_condition("eq41", in, params);
    }
    in.subject = s.phi;
    require_condition("doubling_3_3a", in, params);
    in.subject = s.rho;
    require_condition("doubling_3_3a", in, params);
    const KernelSpec kernel =
        eq34 ? KernelSpec::generalized(params, s.rho, s.gamma) : KernelSpec::riesz_type(params, s.rho);
    // The matching Bessel-Riesz kernel when rho is a pure unit power.
    std::optional<KernelSpec> twin;
    if (s.rho.family() == GrowthFunction::Family::power && s.rho.coefficient() == 1.0) {
        const double beta = eq34 ? s.rho.exponent() + params.d_alpha : s.rho.exponent();
        if (beta > 0.0 && beta < params.d_alpha) {
            twin = KernelSpec::bessel_riesz(params, beta, eq34 ? s.gamma : 0.0);
        }
    }
    const GrowthFunction psi = s.phi.powered(s.p / q);
    const Body body = [&, q](const SupGrid& grid, const QuadSpec& quad, Checks& checks) {
        warn_condition(eq34 ? "eq35" : "eq39", in, params, checks, s.rho.descriptor());
        checks.notes.push_back("q = " + fmt(q) + ", psi = " + psi.descriptor());
        const OperatorRows o{s.which, kernel, s.p, q, s.phi, psi, 1.0, ""};
        auto rows = operator_rows(params, o, corpus, grid, quad, opts.jobs, checks);
        if (twin) {
            const OperatorRows t{s.which, *twin, s.p, q, s.phi, psi, 1.0, ""};
            Checks scratch;
            const auto ref = operator_rows(params, t, corpus, grid, quad, opts.jobs, scratch);
            double worst = 0.0;
            for (std::size_t i = 0; i < rows.size() && i < ref.size(); ++i) {
                const double a = rows[i].lhs;
                const double b = ref[i].lhs;
                const double diff = a == b ? 0.0 : std::abs(a - b) / std::max(std::abs(b), 1e-300);
                worst = std::max(worst, diff);
            }
            checks.notes.push_back("largest relative difference from " + twin->describe() + ": " + fmt(worst));
            checks.require(worst <= 1e-6, "power-law reduction differs from the Bessel-Riesz pipeline");
        }
        return rows;
    };
    return drive("generalized_ops", body, opts, Mode::stability);
}

// ---------------------------------------------------------------------------
// BMO

namespace {

void check_bmo_hypotheses(const DunklParams& params, const BmoSetup& s) {
    ConditionInputs in;
    in.rho = s.rho;
    in.phi = s.phi;
    in.psi = s.psi;
    in.subject = s.rho;
    require_condition("doubling_3_3a", in, params);
    for (const char* id : {"eq39", "eq45", "eq46", "eq47", "eq48"}) require_condition(id, in, params);
    in.subject = s.phi;
    require_condition("almost_increasing", in, params);
    require_condition("doubling_3_3a", in, params);
    in.subject = s.psi;
    require_condition("almost_increasing", in, params);
}

}  // namespace

RatioReport verify_bmo(const DunklParams& params, const BmoSetup& s, const Corpus& corpus,
                       const SuiteOptions& opts) {
    check_bmo_hypotheses(params, s);
    const Body body = [&](const SupGrid& grid, const QuadSpec& quad, Checks& checks) {
        return per_entry(corpus, 1, checks, [&](const CorpusEntry& e) {
            const auto out = tabulate(
                cache_key(params, e.name, "modified:" + s.rho.descriptor(), quad), e.field,
                [&](double x) { return modified_fractional_apply(params, s.rho, e.field, x, quad); },
                TabulatedField::Tail::constant, opts.jobs);
            const auto lhs = bmo_phi_norm(params, out.field(), s.psi, grid, quad);
            const auto rhs = bmo_phi_norm(params, e.field, s.phi, grid, quad);
            return std::vector<PendingRow>{{e.name,
                                            {{"alpha", params.alpha},
                                             {"rho", s.rho.descriptor()},
                                             {"phi", s.phi.descriptor()},
                                             {"psi", s.psi.descriptor()},
                                             {"lhs_arg_r", lhs.arg_r},
                                             {"lhs_arg_x", lhs.arg_x}},
                                            lhs.value,
                                            rhs.value,
                                            "bmo"}};
        });
    };
    return drive("bmo", body, opts, Mode::stability);
}

RatioReport verify_pointwise_lemmas(const DunklParams& params, const BmoSetup& s, const Corpus& corpus,
                                    const SuiteOptions& opts) {
    ConditionInputs in;
    in.rho = s.rho;
    require_condition("eq46", in, params);
    const KernelSpec kernel = KernelSpec::riesz_type(params, s.rho);
    const double d = params.d_alpha;
    const Body body = [&](const SupGrid& grid, const QuadSpec& quad, Checks& checks) {
        std::vector<PendingRow> rows;
        const int ppo = std::max(1, grid.points_per_octave / 2);
        std::vector<double> ys;
        for (int k = 0; k <= 6 * ppo; ++k) ys.push_back(std::exp2(static_cast<double>(k) / ppo));
        std::vector<std::array<double, 4>> worst(ys.size());
        parallel_for(ys.size(), opts.jobs, [&](std::size_t i) {
            const double ay = ys[i];
            double w1 = -1.0, w2 = -1.0, l1 = 0.0, l2 = 0.0;
            double r1 = 1.0, r2 = 1.0;
            for (double sy : {1.0, -1.0}) {
                const double y = sy * ay;
                for (int j = 0; j <= 2 * ppo; ++j) {
                    for (double sx : {1.0, -1.0}) {
                        const double x = sx * 0.5 * ay * std::exp2(-static_cast<double>(j) / ppo);
                        const double diff = std::abs(translate_kernel_difference(params, kernel, x, y, quad));
                        const double tr = translate_kernel(params, kernel, x, y, quad);
                        const double b1 = std::abs(x) * s.rho(ay) / std::pow(ay, d + 1.0);
                        const double b2 = s.rho(ay) / std::pow(ay, d);
                        if (diff / b1 > w1) {
                            w1 = diff / b1;
                            l1 = diff;
                            r1 = b1;
                        }
                        if (tr / b2 > w2) {
                            w2 = tr / b2;
                            l2 = tr;
                            r2 = b2;
                        }
                    }
                }
                // x = 0: the difference vanishes identically.
                if (translate_kernel_difference(params, kernel, 0.0, y, quad) != 0.0) w1 = kInf;
            }
            worst[i] = {l1, r1, l2, r2};
            if (!std::isfinite(w1)) worst[i][0] = kInf;
        });
        for (std::size_t i = 0; i < ys.size(); ++i) {
            const ojson p = {{"alpha", params.alpha}, {"rho", s.rho.descriptor()}, {"abs_y", ys[i]}};
            rows.push_back({"K_rho", p, worst[i][0], worst[i][1], "difference"});
            rows.push_back({"K_rho", p, worst[i][2], worst[i][3], "translate"});
        }
        // Averaged oscillation bound outside B(0, r).
        auto avg = per_entry(corpus, 1, checks, [&](const CorpusEntry& e) {
            const double bmo = bmo_phi_norm(params, e.field, s.phi, grid, quad).value;
            std::vector<PendingRow> out;
            const double A = params.A_alpha;
            const double w = params.weight_exponent();
            const QuadSpec inner = quad.tightened(10.0);
            for (double x : {0.0, 0.5, 2.0}) {
                for (double r : {0.25, 1.0, 4.0}) {
                    const double m = ball_mean(params, e.field, x, r, inner);
                    const std::function<double(double)> g = [&](double t) {
                        const double a = std::abs(translate_real(params, e.field, x, t, inner) - m);
                        const double b = std::abs(translate_real(params, e.field, x, -t, inner) - m);
                        return s.rho(t) / std::pow(t, d + 1.0) * (a + b) * A * std::pow(t, w);
                    };
                    std::vector<Breakpoint> pts;
                    if (x == 0.0) {
                        for (double b : e.field.radial_breaks()) pts.emplace_back(b);
                    } else {
                        pts = translation_breakpoints(params, e.field, x);
                    }
                    std::vector<Breakpoint> kept;
                    for (const auto& p : pts) {
                        if (p.pos > r) kept.push_back(p);
                    }
                    const double lhs = integrate_radial(g, r, kInf, kept, quad);
                    const double rhs = s.rho(r) * s.phi(r) / r * bmo;
                    out.push_back({e.name, {{"alpha", params.alpha}, {"x", x}, {"r", r}, {"bmo_norm", bmo}}, lhs,
                                   rhs, "averaged"});
                }
            }
            return out;
        });
        rows.insert(rows.end(), avg.begin(), avg.end());
        return rows;
    };
    return drive("pointwise_lemmas", body, opts, Mode::stability);
}

// ---------------------------------------------------------------------------
// Dispatch

std::vector<std::string> suite_names() {
    return {"special_functions", "plancherel",     "translation",     "transform_identities", "kernel_norms",
            "maximal_strong",    "maximal_weak",   "maximal_morrey",  "bessel_riesz_t",       "bessel_riesz_st",
            "bessel_riesz_omega", "generalized_ops", "bmo",           "pointwise_lemmas"};
}

namespace {

class ConfigReader {
public:
    ConfigReader(const nlohmann::json& j, std::string suite) : j_(j), suite_(std::move(suite)) {
        if (!j_.is_object() && !j_.is_null()) throw DomainError("suite config must be a JSON object");
    }
    double number(const std::string& key, double def) {
        used_.insert(key);
        if (!j_.contains(key)) return def;
        if (!j_.at(key).is_number()) throw DomainError("config key '" + key + "' must be a number");
        return j_.at(key).get<double>();
    }
    std::optional<double> optional_number(const std::string& key) {
        used_.insert(key);
        if (!j_.contains(key) || j_.at(key).is_null()) return std::nullopt;
        if (!j_.at(key).is_number()) throw DomainError("config key '" + key + "' must be a number");
        return j_.at(key).get<double>();
    }
    std::string text(const std::string& key, const std::string& def) {
        used_.insert(key);
        if (!j_.contains(key)) return def;
        if (!j_.at(key).is_string()) throw DomainError("config key '" + key + "' must be a string");
        return j_.at(key).get<std::string>();
    }
    GrowthFunction growth(const std::string& key, const GrowthFunction& def) {
        used_.insert(key);
        if (!j_.contains(key)) return def;
        if (!j_.at(key).is_string()) throw DomainError("config key '" + key + "' must be a growth-function string");
        try {
            return GrowthFunction::parse(j_.at(key).get<std::string>());
        } catch (const DomainError& ex) {
            throw DomainError("config key '" + key + "': " + ex.what());
        }
    }
    std::vector<double> numbers(const std::string& key, std::vector<double> def) {
        used_.insert(key);
        if (!j_.contains(key)) return def;
        const auto& v = j_.at(key);
        if (v.is_number()) return {v.get<double>()};
        if (!v.is_array()) throw DomainError("config key '" + key + "' must be a list of numbers");
        std::vector<double> out;
        for (const auto& x : v) {
            if (!x.is_number()) throw DomainError("config key '" + key + "' must be a list of numbers");
            out.push_back(x.get<double>());
        }
        return out;
    }
    Corpus corpus(const Corpus& def) {
        used_.insert("functions");
        if (!j_.contains("functions")) return def;
        const auto& v = j_.at("functions");
        if (!v.is_array()) throw DomainError("config key 'functions' must be a list of names");
        std::vector<std::string> names;
        for (const auto& x : v) {
            if (!x.is_string()) throw DomainError("config key 'functions' must be a list of names");
            names.push_back(x.get<std::string>());
        }
        return corpus_subset(default_corpus(), names);
    }
    void finish() const {
        if (!j_.is_object()) return;
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!used_.count(it.key())) {
                throw DomainError("unknown config key '" + it.key() + "' for suite " + suite_);
            }
        }
    }

private:
    const nlohmann::json& j_;
    std::string suite_;
    std::set<std::string> used_;
};

}  // namespace

RatioReport run_suite(const std::string& name, const nlohmann::json& config, const SuiteOptions& opts) {
    ConfigReader c(config, name);
    const auto params = make_params(c.number("alpha", 0.0));
    const Corpus all = default_corpus();
    const auto finish = [&](auto&& run) {
        c.finish();
        return run();
    };
    if (name == "special_functions") return finish([&] { return verify_special_functions(opts); });
    if (name == "plancherel") {
        std::vector<double> alphas = c.numbers("alphas", {0.0, 0.5, 2.0});
        if (config.is_object() && config.contains("alpha") && !config.contains("alphas")) alphas = {params.alpha};
        const Corpus corpus = c.corpus(corpus_subset(all, {"gaussian", "bump_m2", "bump_m1", "bump", "bump_p1"}));
        return finish([&] { return verify_plancherel(alphas, corpus, opts); });
    }
    if (name == "translation") {
        const Corpus corpus = c.corpus(all);
        return finish([&] { return verify_translation(params, corpus, opts); });
    }
    if (name == "transform_identities") return finish([&] { return verify_transform_identities(params, opts); });
    if (name == "kernel_norms") {
        const double beta = c.number("beta", 1.0);
        const double gamma = c.number("gamma", 1.0);
        const double t = c.number("t", 1.5);
        return finish([&] { return verify_kernel_norms(params, beta, gamma, t, opts); });
    }
    if (name == "maximal_strong") {
        const double p = c.number("p", 2.0);
        const Corpus corpus = c.corpus(all);
        return finish([&] { return verify_maximal_strong(params, p, corpus, opts); });
    }
    if (name == "maximal_weak") {
        const Corpus corpus = c.corpus(all);
        return finish([&] { return verify_maximal_weak(params, corpus, opts); });
    }
    if (name == "maximal_morrey") {
        const double p = c.number("p", 2.0);
        const auto phi = c.growth("phi", GrowthFunction::power(1.0, -0.5));
        const Corpus corpus = c.corpus(all);
        return finish([&] { return verify_maximal_morrey(params, p, phi, corpus, opts); });
    }
    if (name == "bessel_riesz_t" || name == "bessel_riesz_st" || name == "bessel_riesz_omega") {
        BesselRieszSetup s;
        s.beta = c.number("beta", s.beta);
        s.gamma = c.number("gamma", s.gamma);
        s.p = c.number("p", s.p);
        s.nu = c.number("nu", s.nu);
        s.t = c.number("t", s.t);
        s.s = c.number("s", s.s);
        s.omega = c.growth("omega", GrowthFunction::power(1.0, -s.beta));
        const Corpus corpus = c.corpus(all);
        return finish([&] {
            if (name == "bessel_riesz_t") return verify_bessel_riesz_t(params, s, corpus, opts);
            if (name == "bessel_riesz_st") return verify_bessel_riesz_st(params, s, corpus, opts);
            return verify_bessel_riesz_omega(params, s, corpus, opts);
        });
    }
    if (name == "generalized_ops") {
        GeneralizedSetup s;
        s.which = c.text("which", s.which);
        const bool eq34 = s.which == "bessel_riesz_eq34";
        s.gamma = c.number("gamma", eq34 ? 0.5 : 0.0);
        s.rho = c.growth(eq34 ? "rho_tilde" : "rho",
                         eq34 ? GrowthFunction::power(1.0, 1.0 - params.d_alpha) : GrowthFunction::power(1.0, 1.0));
        s.p = c.number("p", s.p);
        s.q = c.optional_number("q");
        s.phi = c.growth("phi", s.phi);
        const Corpus corpus = c.corpus(all);
        return finish([&] { return verify_generalized_ops(params, s, corpus, opts); });
    }
    if (name == "bmo" || name == "pointwise_lemmas") {
        BmoSetup s;
        s.rho = c.growth("rho", s.rho);
        s.phi = c.growth("phi", s.phi);
        s.psi = c.growth("psi", s.psi);
        const Corpus corpus = c.corpus(name == "bmo" ? corpus_with_tag(all, "bmo") : corpus_subset(all, {"chi1", "log_cut"}));
        return finish([&] {
            return name == "bmo" ? verify_bmo(params, s, corpus, opts) : verify_pointwise_lemmas(params, s, corpus, opts);
        });
    }
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace dunkl
