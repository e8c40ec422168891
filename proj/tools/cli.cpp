#include "dunkl/cli.hpp"

#include "dunkl/core.hpp"
#include "dunkl/dunklops.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/verify.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace dunkl::cli {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string num(double v) { return fmt("%.15g", v); }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& ex) {
        throw DomainError("config '" + path + "' is not valid JSON: " + ex.what());
    }
}

double number_at(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number()) throw DomainError("config key '" + where + key + "' must be a number");
    return v.get<double>();
}

int integer_at(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw DomainError("config key '" + where + key + "' must be an integer");
    return v.get<int>();
}

void apply_grid(SupGrid& g, const json& j) {
    if (!j.is_object()) throw DomainError("config key 'grid' must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& k = it.key();
        if (k == "r_min") g.r_min = number_at(j, k, "grid.");
        else if (k == "r_max") g.r_max = number_at(j, k, "grid.");
        else if (k == "points_per_octave") g.points_per_octave = integer_at(j, k, "grid.");
        else if (k == "x_min") g.x_min = number_at(j, k, "grid.");
        else if (k == "x_max") g.x_max = number_at(j, k, "grid.");
        else if (k == "x_points") g.x_points = integer_at(j, k, "grid.");
        else throw DomainError("unknown config key 'grid." + k + "'");
    }
    g.validate();
}

void apply_quad(QuadSpec& q, const json& j) {
    if (!j.is_object()) throw DomainError("config key 'quad' must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& k = it.key();
        if (k == "rel_tol") q.rel_tol = number_at(j, k, "quad.");
        else if (k == "abs_tol") q.abs_tol = number_at(j, k, "quad.");
        else if (k == "max_panels") q.max_panels = integer_at(j, k, "quad.");
        else if (k == "jacobi_nodes") q.jacobi_nodes = integer_at(j, k, "quad.");
        else if (k == "tail_cutoff") q.tail_cutoff = number_at(j, k, "quad.");
        else throw DomainError("unknown config key 'quad." + k + "'");
    }
    q.validate();
}

int env_jobs(int fallback) {
    const char* v = std::getenv("DUNKL_LINE_JOBS");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1) throw DomainError("DUNKL_LINE_JOBS must be a positive integer");
    return static_cast<int>(n);
}

ScalarField named_function(const std::string& name) {
    if (name == "one") return constant_field(1.0);
    if (name == "zero") return zero_field();
    return corpus_subset(default_corpus(), {name}).front().field;
}

std::string function_names() {
    std::string out = "one, zero";
    for (const auto& e : default_corpus()) out += ", " + e.name;
    return out;
}

std::optional<GrowthFunction> growth_opt(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return GrowthFunction::parse(text);
}

spdlog::level::level_enum parse_level(const std::string& s) {
    const auto lvl = spdlog::level::from_str(s);
    if (lvl == spdlog::level::off && s != "off") throw DomainError("unknown log level '" + s + "'");
    return lvl;
}

SuiteOptions suite_options(const RunConfig& c) {
    SuiteOptions o;
    o.grid = c.grid;
    o.quad = c.quad;
    o.refine = c.refine;
    o.jobs = c.jobs;
    return o;
}

std::string render(const RatioReport& r, const std::string& format) {
    return format == "csv" ? report_to_csv(r) : report_to_json(r);
}

std::string summary(const RatioReport& r) {
    std::string s = r.suite_id + " pass=" + (r.pass ? "true" : "false") + " empirical_sup=" + num(r.empirical_sup);
    if (r.refined_sup) s += " refined_sup=" + num(*r.refined_sup);
    s += " rows=" + std::to_string(r.rows.size());
    return s;
}

std::string indexed_path(const std::string& path, std::size_t i) {
    const std::filesystem::path p(path);
    const auto name = p.stem().string() + "_" + std::to_string(i) + p.extension().string();
    return (p.parent_path() / name).string();
}

}  // namespace

// ---------------------------------------------------------------------------
// Config

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw DomainError("config must be a JSON object");
    RunConfig c;
    c.quad = SuiteOptions::default_suite_quad();
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const auto& k = it.key();
        const auto& v = it.value();
        if (k == "suite") {
            if (!v.is_string()) throw DomainError("config key 'suite' must be a string");
            c.suite = v.get<std::string>();
        } else if (k == "grid") {
            apply_grid(c.grid, v);
        } else if (k == "quad") {
            apply_quad(c.quad, v);
        } else if (k == "refine") {
            if (!v.is_boolean()) throw DomainError("config key 'refine' must be true or false");
            c.refine = v.get<bool>();
        } else if (k == "jobs") {
            c.jobs = integer_at(doc, k, "");
            if (c.jobs < 1) throw DomainError("config key 'jobs' must be >= 1");
        } else if (k == "log_level") {
            if (!v.is_string()) throw DomainError("config key 'log_level' must be a string");
            c.log_level = v.get<std::string>();
            parse_level(c.log_level);
        } else if (k == "output") {
            if (!v.is_object()) throw DomainError("config key 'output' must be an object");
            for (auto o = v.begin(); o != v.end(); ++o) {
                if (o.key() == "path" && o.value().is_string()) {
                    c.output_path = o.value().get<std::string>();
                } else if (o.key() == "format" && o.value().is_string()) {
                    c.output_format = o.value().get<std::string>();
                    if (c.output_format != "json" && c.output_format != "csv") {
                        throw DomainError("config key 'output.format' must be csv or json");
                    }
                } else {
                    throw DomainError("invalid config key 'output." + o.key() + "'");
                }
            }
        } else if (k == "sweep") {
            if (!v.is_object()) throw DomainError("config key 'sweep' must be an object of lists");
            for (auto s = v.begin(); s != v.end(); ++s) {
                if (!s.value().is_array() || s.value().empty()) {
                    throw DomainError("config key 'sweep." + s.key() + "' must be a non-empty list");
                }
                c.sweep[s.key()] = s.value().get<std::vector<json>>();
            }
        } else {
            if (k == "alpha") c.alpha = number_at(doc, k, "");
            c.suite_params[k] = v;
        }
    }
    if (c.suite.empty()) throw DomainError("config key 'suite' is required");
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), c.suite) == names.end()) {
        throw DomainError("config key 'suite': unknown suite '" + c.suite + "'");
    }
    return c;
}

RunConfig load_config(const std::string& path) { return parse_config(read_json_file(path)); }

std::vector<json> expand_sweep(const RunConfig& config) {
    std::vector<json> runs{config.suite_params};
    for (const auto& [key, values] : config.sweep) {
        std::vector<json> next;
        for (const auto& base : runs) {
            for (const auto& v : values) {
                json p = base;
                p[key] = v;
                next.push_back(std::move(p));
            }
        }
        runs = std::move(next);
    }
    return runs;
}

void write_atomic(const std::string& path, const std::string& text) {
    const std::filesystem::path target(path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    const std::filesystem::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot write '" + tmp.string() + "'");
        out << text;
        out.flush();
        if (!out) throw DomainError("cannot write '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, target);
}

// ---------------------------------------------------------------------------
// Entry point

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dunkl harmonic analysis on the real line: evaluations, norms and verification suites",
                 "dunkl-line"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "dunkl-line 1.0.0");
    std::string log_level = "warn";
    int jobs = 1;
    app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")->capture_default_str();
    app.add_option("--jobs", jobs, "Worker threads (DUNKL_LINE_JOBS overrides)")->check(CLI::PositiveNumber);

    double alpha = 0.0;
    std::string fname;
    std::vector<double> at;
    SupGrid grid;
    QuadSpec quad = SuiteOptions::default_suite_quad();
    const auto add_common = [&](CLI::App* sub, bool with_f) {
        sub->add_option("--alpha", alpha, "Dunkl parameter (>= -1/2)")->capture_default_str();
        if (with_f) sub->add_option("--f", fname, "Input function: " + function_names())->required();
        sub->add_option("--rel-tol", quad.rel_tol, "Quadrature relative tolerance")->capture_default_str();
        sub->add_option("--abs-tol", quad.abs_tol, "Quadrature absolute tolerance")->capture_default_str();
    };
    const auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--r-min", grid.r_min)->capture_default_str();
        sub->add_option("--r-max", grid.r_max)->capture_default_str();
        sub->add_option("--ppo", grid.points_per_octave, "Radii per octave")->capture_default_str();
        sub->add_option("--x-min", grid.x_min)->capture_default_str();
        sub->add_option("--x-max", grid.x_max)->capture_default_str();
        sub->add_option("--x-points", grid.x_points)->capture_default_str();
    };

    auto* params_cmd = app.add_subcommand("params", "Print d, A, b and c for alpha");
    params_cmd->add_option("--alpha", alpha, "Dunkl parameter")->required();
    bool params_json = false;
    params_cmd->add_flag("--json", params_json, "JSON output");

    auto* transform_cmd = app.add_subcommand("transform", "Dunkl transform F f(lambda)");
    add_common(transform_cmd, true);
    transform_cmd->add_option("--at", at, "Frequencies lambda")->required();

    auto* translate_cmd = app.add_subcommand("translate", "Translation tau_x f(y)");
    add_common(translate_cmd, true);
    double shift = 0.0;
    translate_cmd->add_option("--x", shift, "Translation x")->required();
    translate_cmd->add_option("--at", at, "Points y")->required();

    auto* apply_cmd = app.add_subcommand("apply", "Apply an operator at points x");
    add_common(apply_cmd, true);
    add_grid(apply_cmd);
    std::string op = "bessel_riesz";
    double beta = 1.0;
    double gamma = 0.0;
    std::string rho_text;
    apply_cmd->add_option("--kernel", op, "bessel_riesz, generalized, fractional, modified or maximal")
        ->check(CLI::IsMember({"bessel_riesz", "generalized", "fractional", "modified", "maximal"}))
        ->capture_default_str();
    apply_cmd->add_option("--beta", beta)->capture_default_str();
    apply_cmd->add_option("--gamma", gamma)->capture_default_str();
    apply_cmd->add_option("--rho", rho_text, "rho (or rho~ for generalized), e.g. pow:C=1,e=0.5");
    apply_cmd->add_option("--at", at, "Points x")->required();

    auto* norm_cmd = app.add_subcommand("norm", "Lebesgue, Morrey, generalized Morrey or BMO norm");
    add_common(norm_cmd, true);
    add_grid(norm_cmd);
    std::string kind = "lp";
    double p = 2.0;
    double q = 4.0;
    std::string phi_text;
    norm_cmd->add_option("--kind", kind)->check(CLI::IsMember({"lp", "morrey", "gmorrey", "bmo"}))->capture_default_str();
    norm_cmd->add_option("--p", p, "Exponent p (inf allowed for lp)")->capture_default_str();
    norm_cmd->add_option("--q", q, "Morrey exponent q")->capture_default_str();
    norm_cmd->add_option("--phi", phi_text, "Growth function for gmorrey and bmo");

    auto* check_cmd = app.add_subcommand("check", "Check a structural condition on growth functions");
    std::string condition;
    ConditionInputs cin;
    std::string psi_text, rho_tilde_text, omega_text, subject_text;
    check_cmd->add_option("--condition", condition, "Condition id")->required()->check(
        CLI::IsMember(condition_ids()));
    check_cmd->add_option("--alpha", alpha)->capture_default_str();
    check_cmd->add_option("--rho", rho_text);
    check_cmd->add_option("--rho-tilde", rho_tilde_text);
    check_cmd->add_option("--phi", phi_text);
    check_cmd->add_option("--psi", psi_text);
    check_cmd->add_option("--omega", omega_text);
    check_cmd->add_option("--subject", subject_text, "Subject of doubling/monotonicity checks");
    check_cmd->add_option("--p", cin.p)->capture_default_str();
    check_cmd->add_option("--q", cin.q)->capture_default_str();
    check_cmd->add_option("--gamma", cin.gamma)->capture_default_str();
    check_cmd->add_option("--beta", cin.beta)->capture_default_str();
    check_cmd->add_option("--nu", cin.nu)->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and write its report");
    std::string suite, config_path, out_path, format = "json";
    bool no_refine = false;
    verify_cmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--config", config_path, "Flat JSON config")->check(CLI::ExistingFile);
    verify_cmd->add_option("--alpha", alpha, "Overrides the config's alpha");
    verify_cmd->add_option("--out", out_path, "Report path (stdout when omitted)");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_flag("--no-refine", no_refine, "Skip the refinement rerun");

    auto* sweep_cmd = app.add_subcommand("sweep", "Run the cartesian product of a config's sweep block");
    sweep_cmd->add_option("--config", config_path, "Flat JSON config with a sweep block")
        ->required()
        ->check(CLI::ExistingFile);
    sweep_cmd->add_option("--out", out_path, "Report path; run i is written as <stem>_<i><ext>");
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) {
            std::ostringstream msg;
            app.exit(ex, msg, msg);
            out << msg.str();
            return 0;
        }
        err << "error: " << ex.what() << "\n" << "run with --help for usage\n";
        return 1;
    }

    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("dunkl-line", sink);
    logger->set_pattern("[%l] %v");

    try {
        logger->set_level(parse_level(log_level));
        jobs = env_jobs(jobs);
        const QuadSpec quad_checked = [&] {
            quad.validate();
            return quad;
        }();

        if (*params_cmd) {
            const auto pr = make_params(alpha);
            if (params_json) {
                ojson j = {{"alpha", pr.alpha}, {"d", pr.d_alpha}, {"A", pr.A_alpha}, {"b", pr.b_alpha}};
                j["c"] = pr.c_alpha ? ojson(*pr.c_alpha) : ojson(nullptr);
                out << j.dump(2) << "\n";
            } else {
                out << "alpha=" << fmt("%.10g", pr.alpha) << "\n"
                    << "d=" << fmt("%.10g", pr.d_alpha) << "\n"
                    << "A=" << fmt("%.10g", pr.A_alpha) << "\n"
                    << "b=" << fmt("%.10g", pr.b_alpha) << "\n"
                    << "c=" << (pr.c_alpha ? fmt("%.10g", *pr.c_alpha) : std::string("none (classical)")) << "\n";
            }
            return 0;
        }

        if (*transform_cmd) {
            const auto pr = make_params(alpha);
            const auto f = named_function(fname);
            out << "lambda,re,im\n";
            for (double l : at) {
                const auto v = transform_at(pr, f, l, quad_checked);
                out << num(l) << "," << num(v.real()) << "," << num(v.imag()) << "\n";
            }
            return 0;
        }

        if (*translate_cmd) {
            const auto pr = make_params(alpha);
            const auto f = named_function(fname);
            out << "y,value\n";
            for (double y : at) out << num(y) << "," << num(translate_real(pr, f, shift, y, quad_checked)) << "\n";
            return 0;
        }

        if (*apply_cmd) {
            const auto pr = make_params(alpha);
            const auto f = named_function(fname);
            grid.validate();
            const auto rho = growth_opt(rho_text);
            const auto need_rho = [&]() -> const GrowthFunction& {
                if (!rho) throw DomainError("--kernel " + op + " needs --rho");
                return *rho;
            };
            std::vector<std::string> warnings;
            out << "x,value\n";
            std::vector<double> values;
            if (op == "maximal") values = maximal_values(pr, f, at, grid, quad_checked);
            for (std::size_t i = 0; i < at.size(); ++i) {
                const double x = at[i];
                double v = 0.0;
                if (op == "maximal") v = values[i];
                else if (op == "bessel_riesz") v = bessel_riesz_apply(pr, beta, gamma, f, x, quad_checked);
                else if (op == "generalized")
                    v = generalized_bessel_riesz_apply(pr, need_rho(), gamma, f, x, quad_checked,
                                                       i == 0 ? &warnings : nullptr);
                else if (op == "fractional")
                    v = fractional_apply(pr, need_rho(), f, x, quad_checked, i == 0 ? &warnings : nullptr);
                else v = modified_fractional_apply(pr, need_rho(), f, x, quad_checked);
                out << num(x) << "," << num(v) << "\n";
            }
            for (const auto& w : warnings) logger->warn("{}", w);
            return 0;
        }

        if (*norm_cmd) {
            const auto pr = make_params(alpha);
            const auto f = named_function(fname);
            grid.validate();
            if (kind == "lp") {
                const ojson j = {{"value", lp_norm(pr, f, p, quad_checked)}, {"p", p}};
                out << j.dump(2) << "\n";
                return 0;
            }
            NormResult r;
            if (kind == "morrey") {
                r = morrey_norm(pr, f, p, q, grid, quad_checked);
            } else {
                const auto phi = growth_opt(phi_text);
                if (!phi) throw DomainError("--kind " + kind + " needs --phi");
                r = kind == "gmorrey" ? generalized_morrey_norm(pr, f, p, *phi, grid, quad_checked)
                                      : bmo_phi_norm(pr, f, *phi, grid, quad_checked);
            }
            out << to_json(r) << "\n";
            return 0;
        }

        if (*check_cmd) {
            const auto pr = make_params(alpha);
            cin.rho = growth_opt(rho_text);
            cin.rho_tilde = growth_opt(rho_tilde_text);
            cin.phi = growth_opt(phi_text);
            cin.psi = growth_opt(psi_text);
            cin.omega = growth_opt(omega_text);
            cin.subject = growth_opt(subject_text);
            const auto rep = check_condition(condition, cin, pr);
            ojson j = {{"condition_id", rep.condition_id},
                       {"holds", rep.holds},
                       {"witness_r", rep.witness_r},
                       {"witness_ratio", rep.witness_ratio},
                       {"constant_estimate", rep.constant_estimate},
                       {"divergent", rep.divergent},
                       {"warnings", rep.warnings}};
            for (const char* k : {"witness_r", "witness_ratio", "constant_estimate"}) {
                if (!std::isfinite(j[k].get<double>())) j[k] = nullptr;
            }
            out << j.dump(2) << "\n";
            return rep.holds ? 0 : 2;
        }

        if (*verify_cmd) {
            RunConfig c;
            if (!config_path.empty()) {
                c = load_config(config_path);
            } else {
                if (suite.empty()) throw DomainError("verify needs --suite or --config");
                c.suite = suite;
                c.quad = SuiteOptions::default_suite_quad();
            }
            if (!suite.empty()) c.suite = suite;
            if (verify_cmd->count("--alpha")) {
                c.alpha = alpha;
                c.suite_params["alpha"] = alpha;
            }
            if (no_refine) c.refine = false;
            if (app.count("--jobs")) c.jobs = jobs;
            c.jobs = env_jobs(c.jobs);
            if (!out_path.empty()) c.output_path = out_path;
            if (verify_cmd->count("--format")) c.output_format = format;
            if (!c.sweep.empty()) throw DomainError("config has a sweep block; use the sweep subcommand");
            if (!app.count("--log-level")) logger->set_level(parse_level(c.log_level));
            auto opts = suite_options(c);
            opts.dry_run = true;
            run_suite(c.suite, c.suite_params, opts);
            opts.dry_run = false;
            logger->info("running suite {} (jobs={})", c.suite, opts.jobs);
            const auto report = run_suite(c.suite, c.suite_params, opts);
            const std::string text = render(report, c.output_format);
            if (c.output_path) {
                write_atomic(*c.output_path, text);
                out << summary(report) << "\n";
            } else {
                out << text;
            }
            for (const auto& n : report.notes) logger->info("{}", n);
            return report.pass ? 0 : 2;
        }

        if (*sweep_cmd) {
            RunConfig c = load_config(config_path);
            if (app.count("--jobs")) c.jobs = jobs;
            c.jobs = env_jobs(c.jobs);
            if (!out_path.empty()) c.output_path = out_path;
            if (sweep_cmd->count("--format")) c.output_format = format;
            if (!app.count("--log-level")) logger->set_level(parse_level(c.log_level));
            const auto runs = expand_sweep(c);
            auto opts = suite_options(c);
            opts.jobs = 1;
            opts.dry_run = true;
            for (const auto& r : runs) run_suite(c.suite, r, opts);
            opts.dry_run = false;
            logger->info("sweep: {} runs of {} with {} workers", runs.size(), c.suite, c.jobs);
            std::vector<std::optional<RatioReport>> reports(runs.size());
            std::vector<std::string> errors(runs.size());
            std::atomic<std::size_t> next{0};
            const auto worker = [&] {
                for (std::size_t i = next++; i < runs.size(); i = next++) {
                    try {
                        reports[i] = run_suite(c.suite, runs[i], opts);
                        if (c.output_path) {
                            write_atomic(indexed_path(*c.output_path, i), render(*reports[i], c.output_format));
                        }
                    } catch (const std::exception& ex) {
                        errors[i] = ex.what();
                    }
                }
            };
            std::vector<std::thread> pool;
            const int workers = std::min<int>(c.jobs, static_cast<int>(runs.size()));
            for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
            worker();
            for (auto& t : pool) t.join();
            bool all_pass = true;
            out << "run,params,pass,empirical_sup\n";
            for (std::size_t i = 0; i < runs.size(); ++i) {
                std::string params = runs[i].dump();
                std::string quoted = "\"";
                for (char ch : params) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                quoted += "\"";
                if (!errors[i].empty()) {
                    all_pass = false;
                    logger->error("run {}: {}", i, errors[i]);
                    out << i << "," << quoted << ",error,\n";
                    continue;
                }
                all_pass = all_pass && reports[i]->pass;
                out << i << "," << quoted << "," << (reports[i]->pass ? "true" : "false") << ","
                    << num(reports[i]->empirical_sup) << "\n";
            }
            return all_pass ? 0 : 2;
        }
    } catch (const DomainError& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const AccuracyError& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const RangeError& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace dunkl::cli
