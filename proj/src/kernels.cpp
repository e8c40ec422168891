#include "dunkl/kernels.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace dunkl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_number(const std::string& token, const std::string& context) {
    double v = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end) {
        throw DomainError("growth function '" + context + "': bad number '" + token + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double table_slope(const std::vector<std::pair<double, double>>& t, std::size_t i) {
    return (std::log(t[i + 1].second) - std::log(t[i].second)) / (std::log(t[i + 1].first) - std::log(t[i].first));
}

// r^a |ln r|^k integrability at 0 (at_zero) or at infinity.
bool power_log_integrable(double a, double k, bool at_zero) {
    if (at_zero) return a > -1.0 || (a == -1.0 && k < -1.0);
    return a < -1.0 || (a == -1.0 && k < -1.0);
}

}  // namespace

// ---------------------------------------------------------------------------
// GrowthFunction

GrowthFunction GrowthFunction::power(double C, double e) {
    if (!(C > 0.0) || !std::isfinite(C) || !std::isfinite(e)) {
        throw DomainError("power growth function needs C > 0 and finite e");
    }
    GrowthFunction g;
    g.family_ = Family::power;
    g.C_ = C;
    g.e_ = e;
    g.descriptor_ = "pow:C=" + format_number(C) + ",e=" + format_number(e);
    return g;
}

GrowthFunction GrowthFunction::power_log(double C, double e, double k) {
    if (!(C > 0.0) || !std::isfinite(C) || !std::isfinite(e) || !std::isfinite(k)) {
        throw DomainError("powlog growth function needs C > 0 and finite e, k");
    }
    GrowthFunction g;
    g.family_ = Family::power_log;
    g.C_ = C;
    g.e_ = e;
    g.k_ = k;
    g.descriptor_ = "powlog:C=" + format_number(C) + ",e=" + format_number(e) + ",k=" + format_number(k);
    return g;
}

GrowthFunction GrowthFunction::tabulated(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw DomainError("table growth function needs at least two points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].first > 0.0) || !(points[i].second > 0.0)) {
            throw DomainError("table growth function needs positive r and values");
        }
        if (i > 0 && !(points[i].first > points[i - 1].first)) {
            throw DomainError("table growth function needs strictly ascending r");
        }
    }
    GrowthFunction g;
    g.family_ = Family::tabulated;
    g.table_ = std::move(points);
    g.descriptor_ = "table:inline";
    return g;
}

GrowthFunction GrowthFunction::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("growth function '" + text + "': missing family prefix");
    const std::string family = trim(text.substr(0, colon));
    const std::string body = text.substr(colon + 1);
    if (family == "table") {
        if (body.empty() || body[0] != '@') {
            throw DomainError("growth function '" + text + "': table needs '@file'");
        }
        const std::string path = body.substr(1);
        std::ifstream in(path);
        if (!in) throw DomainError("growth function '" + text + "': cannot open '" + path + "'");
        std::vector<std::pair<double, double>> pts;
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            auto cells = split(line, ',');
            if (cells.size() != 2) throw DomainError("growth function table '" + path + "': expected two columns");
            const std::string a = trim(cells[0]);
            const std::string b = trim(cells[1]);
            double r = 0.0;
            double v = 0.0;
            auto ra = std::from_chars(a.data(), a.data() + a.size(), r);
            if (ra.ec != std::errc() && first) {
                first = false;
                continue;  // header row
            }
            first = false;
            r = parse_number(a, text);
            v = parse_number(b, text);
            pts.emplace_back(r, v);
        }
        GrowthFunction g = tabulated(std::move(pts));
        g.descriptor_ = text;
        return g;
    }
    if (family != "pow" && family != "powlog") {
        throw DomainError("growth function '" + text + "': unknown family '" + family + "'");
    }
    double C = 1.0;
    std::optional<double> e;
    double k = 0.0;
    for (const auto& item : split(body, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw DomainError("growth function '" + text + "': bad token '" + item + "'");
        const std::string key = trim(item.substr(0, eq));
        const double v = parse_number(trim(item.substr(eq + 1)), text);
        if (key == "C") {
            C = v;
        } else if (key == "e") {
            e = v;
        } else if (key == "k" && family == "powlog") {
            k = v;
        } else {
            throw DomainError("growth function '" + text + "': unknown key '" + key + "'");
        }
    }
    if (!e) throw DomainError("growth function '" + text + "': missing exponent 'e'");
    return family == "pow" ? power(C, *e) : power_log(C, *e, k);
}

double GrowthFunction::operator()(double r) const {
    switch (family_) {
        case Family::power:
            return C_ * std::pow(r, e_);
        case Family::power_log:
            return C_ * std::pow(r, e_) * std::pow(1.0 + std::abs(std::log(r)), k_);
        case Family::tabulated: {
            const auto& t = table_;
            std::size_t i = 0;
            if (r <= t.front().first) {
                i = 0;
            } else if (r >= t.back().first) {
                i = t.size() - 2;
            } else {
                auto it = std::upper_bound(t.begin(), t.end(), r,
                                           [](double v, const std::pair<double, double>& p) { return v < p.first; });
                i = static_cast<std::size_t>(it - t.begin()) - 1;
            }
            const double s = table_slope(t, i);
            return t[i].second * std::exp(s * (std::log(r) - std::log(t[i].first)));
        }
    }
    return 0.0;
}

double GrowthFunction::exponent_at_zero() const {
    if (family_ == Family::tabulated) return table_slope(table_, 0);
    return e_;
}

double GrowthFunction::exponent_at_infinity() const {
    if (family_ == Family::tabulated) return table_slope(table_, table_.size() - 2);
    return e_;
}

std::vector<double> GrowthFunction::kinks() const {
    if (family_ == Family::power_log) return {1.0};
    if (family_ == Family::tabulated) {
        std::vector<double> out;
        for (const auto& p : table_) out.push_back(p.first);
        return out;
    }
    return {};
}

GrowthFunction GrowthFunction::powered(double s) const {
    switch (family_) {
        case Family::power:
            return power(std::pow(C_, s), e_ * s);
        case Family::power_log:
            return power_log(std::pow(C_, s), e_ * s, k_ * s);
        case Family::tabulated: {
            auto pts = table_;
            for (auto& p : pts) p.second = std::pow(p.second, s);
            GrowthFunction g = tabulated(std::move(pts));
            g.descriptor_ = descriptor_ + "^" + format_number(s);
            return g;
        }
    }
    return *this;
}

GrowthFunction GrowthFunction::scaled(double c) const {
    if (!(c > 0.0)) throw DomainError("growth function scale must be positive");
    switch (family_) {
        case Family::power:
            return power(C_ * c, e_);
        case Family::power_log:
            return power_log(C_ * c, e_, k_);
        case Family::tabulated: {
            auto pts = table_;
            for (auto& p : pts) p.second *= c;
            GrowthFunction g = tabulated(std::move(pts));
            g.descriptor_ = format_number(c) + "*" + descriptor_;
            return g;
        }
    }
    return *this;
}

// ---------------------------------------------------------------------------
// KernelSpec

KernelSpec KernelSpec::bessel_riesz(const DunklParams& params, double beta, double gamma) {
    if (!(beta > 0.0 && beta < params.d_alpha)) {
        throw DomainError("Bessel-Riesz kernel needs 0 < beta < d_alpha = " + format_number(params.d_alpha));
    }
    if (!(gamma >= 0.0)) throw DomainError("Bessel-Riesz kernel needs gamma >= 0");
    return {BesselRiesz{beta, gamma}, params};
}

KernelSpec KernelSpec::generalized(const DunklParams& params, GrowthFunction rho_tilde, double gamma) {
    if (!(gamma >= 0.0)) throw DomainError("generalized Bessel-Riesz kernel needs gamma >= 0");
    return {GeneralizedBesselRiesz{std::move(rho_tilde), gamma}, params};
}

KernelSpec KernelSpec::riesz_type(const DunklParams& params, GrowthFunction rho) {
    return {RieszType{std::move(rho)}, params};
}

double KernelSpec::operator()(double x) const { return kernel_eval(*this, x); }

double KernelSpec::origin_exponent() const {
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, BesselRiesz>) {
                return k.beta - params.d_alpha;
            } else if constexpr (std::is_same_v<K, GeneralizedBesselRiesz>) {
                return k.rho_tilde.exponent_at_zero();
            } else {
                return k.rho.exponent_at_zero() - params.d_alpha;
            }
        },
        variant);
}

bool KernelSpec::origin_log() const {
    return std::visit(
        [&](const auto& k) -> bool {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, BesselRiesz>) {
                return false;
            } else if constexpr (std::is_same_v<K, GeneralizedBesselRiesz>) {
                return k.rho_tilde.log_power_at_ends() != 0.0;
            } else {
                return k.rho.log_power_at_ends() != 0.0;
            }
        },
        variant);
}

double KernelSpec::infinity_exponent() const {
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, BesselRiesz>) {
                return k.beta - params.d_alpha - k.gamma;
            } else if constexpr (std::is_same_v<K, GeneralizedBesselRiesz>) {
                return k.rho_tilde.exponent_at_infinity() - k.gamma;
            } else {
                return k.rho.exponent_at_infinity() - params.d_alpha;
            }
        },
        variant);
}

std::vector<double> KernelSpec::kinks() const {
    return std::visit(
        [&](const auto& k) -> std::vector<double> {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, BesselRiesz>) {
                return {};
            } else if constexpr (std::is_same_v<K, GeneralizedBesselRiesz>) {
                return k.rho_tilde.kinks();
            } else {
                return k.rho.kinks();
            }
        },
        variant);
}

std::string KernelSpec::describe() const {
    return std::visit(
        [&](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, BesselRiesz>) {
                return "bessel_riesz(beta=" + format_number(k.beta) + ",gamma=" + format_number(k.gamma) + ")";
            } else if constexpr (std::is_same_v<K, GeneralizedBesselRiesz>) {
                return "generalized(" + k.rho_tilde.descriptor() + ",gamma=" + format_number(k.gamma) + ")";
            } else {
                return "riesz_type(" + k.rho.descriptor() + ")";
            }
        },
        variant) + "@alpha=" + format_number(params.alpha);
}

double kernel_eval(const KernelSpec& spec, double x) {
    const double a = std::abs(x);
    if (a == 0.0) {
        const double e = spec.origin_exponent();
        if (e < 0.0 || (e == 0.0 && spec.origin_log())) {
            throw DomainError("kernel is singular at x = 0");
        }
    }
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, BesselRiesz>) {
                return std::pow(a, k.beta - spec.params.d_alpha) / std::pow(1.0 + a, k.gamma);
            } else if constexpr (std::is_same_v<K, GeneralizedBesselRiesz>) {
                return (a == 0.0 ? (k.rho_tilde.exponent_at_zero() > 0.0 ? 0.0 : k.rho_tilde(1e-300))
                                 : k.rho_tilde(a)) /
                       std::pow(1.0 + a, k.gamma);
            } else {
                if (a == 0.0) return 0.0;
                return k.rho(a) / std::pow(a, spec.params.d_alpha);
            }
        },
        spec.variant);
}

// ---------------------------------------------------------------------------
// Kernel norms

namespace {

// int_0^inf k(r)^t A r^{2 alpha + 1} dr, splitting at 1 and mapping the
// infinite half to (0, 1] by r = 1/s.
double kernel_power_integral(const KernelSpec& spec, double t, const QuadSpec& quad) {
    const DunklParams& p = spec.params;
    const double w = p.weight_exponent();
    const double A = p.A_alpha;
    const double e0 = t * spec.origin_exponent() + w;
    const double einf = t * spec.infinity_exponent() + w;
    const bool lg = spec.origin_log();
    if (!power_log_integrable(e0, lg ? 1.0 : 0.0, true) || !power_log_integrable(einf, lg ? 1.0 : 0.0, false)) {
        throw DomainError("kernel power integral diverges for t = " + format_number(t));
    }
    std::vector<Breakpoint> kinks_inner{Breakpoint{0.0, e0, lg}};
    std::vector<Breakpoint> kinks_outer{Breakpoint{0.0, -einf - 2.0, lg}};
    for (double k : spec.kinks()) {
        if (k > 0.0 && k < 1.0) kinks_inner.emplace_back(k);
        if (k > 1.0) kinks_outer.emplace_back(1.0 / k);
    }
    const auto inner = [&](double r, double, double) {
        return r == 0.0 ? 0.0 : 2.0 * A * std::pow(spec(r), t) * std::pow(r, w);
    };
    const auto outer = [&](double s, double, double) {
        if (s == 0.0) return 0.0;
        const double r = 1.0 / s;
        return 2.0 * A * std::pow(spec(r), t) * std::pow(r, w) / (s * s);
    };
    auto a = integrate_adaptive(inner, 0.0, 1.0, kinks_inner, quad);
    auto b = integrate_adaptive(outer, 0.0, 1.0, kinks_outer, quad);
    if (!a.converged || !b.converged) {
        throw AccuracyError("kernel power integral did not converge", a.value + b.value, a.error + b.error);
    }
    return a.value + b.value;
}

const BesselRiesz& require_bessel_riesz(const KernelSpec& spec, const char* what) {
    const auto* br = std::get_if<BesselRiesz>(&spec.variant);
    if (!br) throw DomainError(std::string(what) + " is only defined for Bessel-Riesz kernels");
    return *br;
}

void check_t_window(const KernelSpec& spec, double t) {
    if (const auto* br = std::get_if<BesselRiesz>(&spec.variant)) {
        const double d = spec.params.d_alpha;
        if (!(br->gamma > 0.0)) throw DomainError("L^t norm of the kernel needs gamma > 0");
        const double lo = d / (d + br->gamma - br->beta);
        const double hi = d / (d - br->beta);
        if (!(t > lo && t < hi)) {
            throw DomainError("t = " + format_number(t) + " outside the window d/(d+gamma-beta) = " + format_number(lo) +
                              " < t < d/(d-beta) = " + format_number(hi));
        }
    }
}

}  // namespace

double kernel_lt_norm_quadrature(const KernelSpec& spec, double t, const QuadSpec& quad) {
    if (!(t >= 1.0) && std::holds_alternative<BesselRiesz>(spec.variant) == false) {
        throw DomainError("kernel L^t norm needs t >= 1");
    }
    check_t_window(spec, t);
    return std::pow(kernel_power_integral(spec, t, quad), 1.0 / t);
}

DyadicSum kernel_lt_norm_dyadic(const KernelSpec& spec, double t, double R, int k_min, int k_max) {
    const auto& br = require_bessel_riesz(spec, "kernel_lt_norm_dyadic");
    check_t_window(spec, t);
    if (!(R > 0.0)) throw DomainError("dyadic sum needs R > 0");
    if (k_max < k_min) throw DomainError("dyadic sum needs k_min <= k_max");
    const double d = spec.params.d_alpha;
    const double a = (br.beta - d) * t + d;
    const double b = br.gamma * t;
    auto term = [&](int k) {
        const double r = std::ldexp(R, k);
        return std::exp(a * std::log(r) - b * std::log1p(r));
    };
    DyadicSum out;
    out.k_min = k_min;
    out.k_max = k_max;
    // Sum from the smallest terms inwards to limit rounding.
    std::vector<double> terms;
    for (int k = k_min; k <= k_max; ++k) terms.push_back(term(k));
    std::vector<double> sorted = terms;
    std::sort(sorted.begin(), sorted.end());
    for (double v : sorted) out.sum += v;
    out.tail = std::max(terms.front(), terms.back()) / out.sum;
    out.value = std::pow(out.sum, 1.0 / t);
    if (out.tail > 1e-12) {
        throw AccuracyError("dyadic sum: boundary term " + format_number(out.tail) + " of the total exceeds 1e-12",
                            out.value, out.tail * out.value);
    }
    return out;
}

DyadicSum kernel_lt_norm_dyadic_auto(const KernelSpec& spec, double t, double R) {
    const auto& br = require_bessel_riesz(spec, "kernel_lt_norm_dyadic");
    check_t_window(spec, t);
    const double d = spec.params.d_alpha;
    const double a = (br.beta - d) * t + d;
    const double b = br.gamma * t;
    // Terms decay like 2^{a k} for k -> -inf and 2^{(a - b) k} for k -> +inf.
    const double lr = std::log2(R);
    const int k_lo = static_cast<int>(std::floor(-lr - 45.0 / a)) - 2;
    const int k_hi = static_cast<int>(std::ceil(-lr + 45.0 / (b - a))) + 2;
    return kernel_lt_norm_dyadic(spec, t, R, k_lo, k_hi);
}

double kernel_morrey_st_norm(const KernelSpec& spec, double s, double t, const SupGrid& grid, const QuadSpec& quad) {
    if (!(s >= 1.0 && s <= t)) throw DomainError("kernel L^{s,t} norm needs 1 <= s <= t");
    const double d = spec.params.d_alpha;
    const auto table = kernel_power_table(spec, s, grid, quad);
    double best = 0.0;
    for (double r : grid.radii()) {
        for (double x : grid.xs_nonnegative()) {
            const double q = ball_integral(spec.params, table, x, r, quad);
            best = std::max(best, std::pow(r, d * (1.0 / t - 1.0 / s)) * std::pow(std::max(q, 0.0), 1.0 / s));
        }
    }
    return best;
}

double kernel_morrey_omega_norm(const KernelSpec& spec, double s, const GrowthFunction& omega, const SupGrid& grid,
                                const QuadSpec& quad) {
    if (!(s >= 1.0)) throw DomainError("kernel L^{s,omega} norm needs s >= 1");
    const double d = spec.params.d_alpha;
    const auto table = kernel_power_table(spec, s, grid, quad);
    double best = 0.0;
    for (double r : grid.radii()) {
        for (double x : grid.xs_nonnegative()) {
            const double q = ball_integral(spec.params, table, x, r, quad);
            best = std::max(best, std::pow(std::max(q, 0.0), 1.0 / s) / (omega(r) * std::pow(r, d / s)));
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Condition checks

namespace {

struct Profile {
    std::vector<double> r;
    std::vector<double> ratio;
};

struct PowerTerm {
    const GrowthFunction* g = nullptr;
    double power = 1.0;
};

// Integrand prod g_i(t)^{p_i} * t^{shift}; leading exponents at the ends.
struct Product {
    std::vector<PowerTerm> terms;
    double shift = 0.0;

    double operator()(double t) const {
        double v = std::pow(t, shift);
        for (const auto& term : terms) v *= std::pow((*term.g)(t), term.power);
        return v;
    }
    double exponent(bool at_zero) const {
        double e = shift;
        for (const auto& term : terms) {
            e += term.power * (at_zero ? term.g->exponent_at_zero() : term.g->exponent_at_infinity());
        }
        return e;
    }
    double log_power() const {
        double k = 0.0;
        for (const auto& term : terms) k += term.power * term.g->log_power_at_ends();
        return k;
    }
    std::vector<Breakpoint> kinks(double lo, double hi) const {
        std::vector<Breakpoint> out;
        for (const auto& term : terms) {
            for (double k : term.g->kinks()) {
                if (k > lo && k < hi) out.emplace_back(k);
            }
        }
        return out;
    }
};

// F(r_i) = int_0^{r_i} h for each grid radius; empty when divergent at 0.
std::optional<std::vector<double>> cumulative_from_zero(const Product& h, const std::vector<double>& r,
                                                        const QuadSpec& quad) {
    const double e = h.exponent(true);
    const double k = h.log_power();
    if (!power_log_integrable(e, k, true)) return std::nullopt;
    std::vector<double> out(r.size());
    auto pts = h.kinks(0.0, r[0]);
    pts.emplace_back(0.0, e, k != 0.0);
    double acc = integrate([&](double t) { return t == 0.0 ? 0.0 : h(t); }, 0.0, r[0], pts, quad);
    out[0] = acc;
    for (std::size_t i = 1; i < r.size(); ++i) {
        acc += integrate(h, r[i - 1], r[i], h.kinks(r[i - 1], r[i]), quad);
        out[i] = acc;
    }
    return out;
}

// G(r_i) = int_{r_i}^inf h; empty when divergent at infinity.
std::optional<std::vector<double>> cumulative_to_infinity(const Product& h, const std::vector<double>& r,
                                                          const QuadSpec& quad) {
    const double e = h.exponent(false);
    const double k = h.log_power();
    if (!power_log_integrable(e, k, false)) return std::nullopt;
    std::vector<double> out(r.size());
    // Tail beyond the grid via s = r_max / t, integrand h(r_max/s) r_max / s^2.
    const double R = r.back();
    std::vector<Breakpoint> pts{Breakpoint{0.0, -e - 2.0, k != 0.0}};
    for (const auto& b : h.kinks(R, kInf)) pts.emplace_back(R / b.pos);
    double acc = integrate([&](double s) { return s == 0.0 ? 0.0 : h(R / s) * R / (s * s); }, 0.0, 1.0, pts, quad);
    out.back() = acc;
    for (std::size_t i = r.size() - 1; i-- > 0;) {
        acc += integrate(h, r[i], r[i + 1], h.kinks(r[i], r[i + 1]), quad);
        out[i] = acc;
    }
    return out;
}

std::vector<double> condition_radii(const ConditionGrid& g) {
    if (!(g.r_min > 0.0) || !(g.r_max > g.r_min) || g.points_per_octave < 1) {
        throw DomainError("condition grid needs 0 < r_min < r_max and points_per_octave >= 1");
    }
    const int n = static_cast<int>(std::floor(std::log2(g.r_max / g.r_min) * g.points_per_octave + 1e-9));
    std::vector<double> out;
    for (int k = 0; k <= n; ++k) out.push_back(g.r_min * std::exp2(static_cast<double>(k) / g.points_per_octave));
    return out;
}

ConditionReport summarise(const std::string& id, const Profile& prof, int ppo) {
    ConditionReport rep;
    rep.condition_id = id;
    double full = 0.0;
    double inner = 0.0;
    bool finite = true;
    const std::size_t trim = static_cast<std::size_t>(2 * ppo);
    for (std::size_t i = 0; i < prof.r.size(); ++i) {
        const double v = prof.ratio[i];
        if (!std::isfinite(v)) {
            finite = false;
            rep.witness_r = prof.r[i];
            rep.witness_ratio = v;
            break;
        }
        if (v > full) {
            full = v;
            rep.witness_r = prof.r[i];
            rep.witness_ratio = v;
        }
        if (i >= trim && i + trim < prof.r.size()) inner = std::max(inner, v);
    }
    if (!finite) {
        rep.holds = false;
        rep.divergent = true;
        rep.constant_estimate = kInf;
        return rep;
    }
    if (prof.r.size() <= 2 * trim) inner = full;
    rep.constant_estimate = full;
    rep.holds = full <= (1.0 + 1e-3) * inner;
    return rep;
}

const GrowthFunction& need(const std::optional<GrowthFunction>& g, const char* name, const std::string& id) {
    if (!g) throw DomainError("condition " + id + " needs " + name);
    return *g;
}

const GrowthFunction& subject_of(const ConditionInputs& in, const std::string& id) {
    if (in.subject) return *in.subject;
    if (in.phi) return *in.phi;
    if (in.rho) return *in.rho;
    if (in.rho_tilde) return *in.rho_tilde;
    if (in.omega) return *in.omega;
    throw DomainError("condition " + id + " needs a growth function");
}

ConditionReport divergent_report(const std::string& id, double r) {
    ConditionReport rep;
    rep.condition_id = id;
    rep.holds = false;
    rep.divergent = true;
    rep.witness_r = r;
    rep.witness_ratio = kInf;
    rep.constant_estimate = kInf;
    return rep;
}

}  // namespace

std::vector<std::string> condition_ids() {
    return {"doubling_3_3a", "eq35", "eq37", "eq39", "eq41", "eq45", "eq46", "eq47", "eq48",
            "almost_increasing", "almost_decreasing", "phi_pointwise_power_bound", "omega_bracket"};
}

ConditionReport check_condition(const std::string& id, const ConditionInputs& in, const DunklParams& params,
                                const ConditionGrid& grid, const QuadSpec& quad) {
    const auto r = condition_radii(grid);
    const int ppo = grid.points_per_octave;
    const double d = params.d_alpha;
    Profile prof;
    prof.r = r;
    prof.ratio.assign(r.size(), 0.0);

    if (id == "doubling_3_3a") {
        const auto& g = subject_of(in, id);
        for (std::size_t i = 0; i < r.size(); ++i) {
            double worst = 1.0;
            for (int j = -8; j <= 8; ++j) {
                const double s = r[i] * std::exp2(j / 8.0);
                const double q = g(s) / g(r[i]);
                worst = std::max({worst, q, 1.0 / q});
            }
            prof.ratio[i] = worst;
        }
        return summarise(id, prof, ppo);
    }
    if (id == "almost_increasing" || id == "almost_decreasing") {
        const auto& g = subject_of(in, id);
        const bool inc = id == "almost_increasing";
        // sup_{r <= s} g(r)/g(s) (increasing) or g(s)/g(r) (decreasing).
        double run_max = 0.0;
        double run_min = kInf;
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double v = g(r[i]);
            run_max = std::max(run_max, v);
            run_min = std::min(run_min, v);
            prof.ratio[i] = inc ? run_max / v : v / run_min;
        }
        return summarise(id, prof, ppo);
    }
    if (id == "phi_pointwise_power_bound") {
        const auto& g = subject_of(in, id);
        for (std::size_t i = 0; i < r.size(); ++i) prof.ratio[i] = g(r[i]) / std::pow(r[i], in.nu);
        return summarise(id, prof, ppo);
    }
    if (id == "omega_bracket") {
        // C' r^{beta - d} <= omega(r) <= C r^{-beta}: both ratios bounded.
        const auto& w = need(in.omega, "omega", id);
        Profile lower = prof;
        for (std::size_t i = 0; i < r.size(); ++i) {
            prof.ratio[i] = w(r[i]) / std::pow(r[i], -in.beta);
            lower.ratio[i] = std::pow(r[i], in.beta - d) / w(r[i]);
        }
        auto up = summarise(id, prof, ppo);
        auto lo = summarise(id, lower, ppo);
        up.holds = up.holds && lo.holds;
        up.constant_estimate = std::max(up.constant_estimate, lo.constant_estimate);
        if (lo.witness_ratio > up.witness_ratio) {
            up.witness_r = lo.witness_r;
            up.witness_ratio = lo.witness_ratio;
        }
        up.divergent = up.divergent || lo.divergent;
        return up;
    }
    if (id == "eq35" || id == "eq39") {
        // Finiteness of a single improper integral; the ratio profile is the
        // running integral normalised by its total.
        Product h;
        double lo = 0.0;
        double hi = kInf;
        if (id == "eq35") {
            h.terms = {{&need(in.rho_tilde, "rho_tilde", id), 1.0}};
            h.shift = d - in.gamma - 1.0;
        } else {
            h.terms = {{&need(in.rho, "rho", id), 1.0}};
            h.shift = -1.0;
            hi = 1.0;
        }
        const double e0 = h.exponent(true);
        const double k = h.log_power();
        if (!power_log_integrable(e0, k, true)) return divergent_report(id, r.front());
        if (hi == kInf && !power_log_integrable(h.exponent(false), k, false)) return divergent_report(id, r.back());
        auto pts = h.kinks(lo, std::min(hi, 1.0));
        pts.emplace_back(0.0, e0, k != 0.0);
        double total = integrate([&](double t) { return t == 0.0 ? 0.0 : h(t); }, 0.0, 1.0, pts, quad);
        if (hi == kInf) {
            std::vector<Breakpoint> tp{Breakpoint{0.0, -h.exponent(false) - 2.0, k != 0.0}};
            for (const auto& b : h.kinks(1.0, kInf)) tp.emplace_back(1.0 / b.pos);
            total += integrate([&](double s) { return s == 0.0 ? 0.0 : h(1.0 / s) / (s * s); }, 0.0, 1.0, tp, quad);
        }
        ConditionReport rep;
        rep.condition_id = id;
        rep.holds = std::isfinite(total);
        rep.constant_estimate = total;
        rep.witness_r = hi;
        rep.witness_ratio = total;
        return rep;
    }
    if (id == "eq37" || id == "eq41") {
        const auto& phi = need(in.phi, "phi", id);
        Product first;
        Product second;
        if (id == "eq37") {
            const auto& rt = need(in.rho_tilde, "rho_tilde", id);
            first.terms = {{&rt, 1.0}};
            first.shift = d - in.gamma - 1.0;
            second.terms = {{&rt, 1.0}, {&phi, 1.0}};
            second.shift = d - in.gamma - 1.0;
        } else {
            const auto& rho = need(in.rho, "rho", id);
            first.terms = {{&rho, 1.0}};
            first.shift = -1.0;
            second.terms = {{&rho, 1.0}, {&phi, 1.0}};
            second.shift = -1.0;
        }
        if (!(in.p > 1.0 && in.q > in.p)) throw DomainError("condition " + id + " needs 1 < p < q");
        auto I1 = cumulative_from_zero(first, r, quad);
        if (!I1) return divergent_report(id, r.front());
        auto I2 = cumulative_to_infinity(second, r, quad);
        if (!I2) return divergent_report(id, r.back());
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double ph = phi(r[i]);
            prof.ratio[i] = (ph * (*I1)[i] + (*I2)[i]) / std::pow(ph, in.p / in.q);
        }
        return summarise(id, prof, ppo);
    }
    if (id == "eq45") {
        const auto& rho = need(in.rho, "rho", id);
        Product h{{{&rho, 1.0}}, -2.0};
        auto I = cumulative_to_infinity(h, r, quad);
        if (!I) return divergent_report(id, r.back());
        for (std::size_t i = 0; i < r.size(); ++i) prof.ratio[i] = (*I)[i] / (rho(r[i]) / r[i]);
        return summarise(id, prof, ppo);
    }
    if (id == "eq46") {
        const auto& rho = need(in.rho, "rho", id);
        auto K = [&](double t) { return rho(t) / std::pow(t, d); };
        for (std::size_t i = 0; i < r.size(); ++i) {
            double worst = 0.0;
            for (int j = -8; j <= 8; ++j) {
                if (j == 0) continue;
                const double s = r[i] * std::exp2(j / 8.0);
                const double lhs = std::abs(K(r[i]) - K(s));
                const double rhs = std::abs(r[i] - s) * rho(s) / std::pow(s, d + 1.0);
                worst = std::max(worst, lhs / rhs);
            }
            prof.ratio[i] = worst;
        }
        return summarise(id, prof, ppo);
    }
    if (id == "eq47") {
        const auto& rho = need(in.rho, "rho", id);
        const auto& phi = need(in.phi, "phi", id);
        Product h{{{&rho, 1.0}, {&phi, 1.0}}, -2.0};
        auto I = cumulative_to_infinity(h, r, quad);
        if (!I) return divergent_report(id, r.back());
        for (std::size_t i = 0; i < r.size(); ++i) prof.ratio[i] = (*I)[i] / (rho(r[i]) * phi(r[i]) / r[i]);
        return summarise(id, prof, ppo);
    }
    if (id == "eq48") {
        const auto& rho = need(in.rho, "rho", id);
        const auto& phi = need(in.phi, "phi", id);
        const auto& psi = need(in.psi, "psi", id);
        Product h{{{&rho, 1.0}}, -1.0};
        auto I = cumulative_from_zero(h, r, quad);
        if (!I) return divergent_report(id, r.front());
        for (std::size_t i = 0; i < r.size(); ++i) prof.ratio[i] = (*I)[i] * phi(r[i]) / psi(r[i]);
        return summarise(id, prof, ppo);
    }
    throw DomainError("unknown condition id '" + id + "'");
}

}  // namespace dunkl
