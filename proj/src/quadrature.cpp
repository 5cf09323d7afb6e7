#include "sfent/quadrature.hpp"

#include "sfent/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <sstream>

namespace sfent {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFourPi = 4.0 * std::numbers::pi;

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double checked(double v, double x)
{
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "integrand returned " << v << " at x = " << x;
        throw Error(ErrorKind::NonFinite, os.str());
    }
    return v;
}

double apply_rule(const RadialFunction& g, double a, double b, const GaussLegendreRule& rule)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = c + h * rule.nodes[i];
        s += rule.weights[i] * checked(g(x), x);
    }
    return s * h;
}

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double whole = 0.0;
    double left = 0.0;
    double right = 0.0;
    double err = 0.0;
    bool final = false;

    double value() const { return left + right; }
};

void refine_panel(Panel& p, const RadialFunction& g, const GaussLegendreRule& rule)
{
    const double m = 0.5 * (p.a + p.b);
    p.left = apply_rule(g, p.a, m, rule);
    p.right = apply_rule(g, m, p.b, rule);
    p.err = std::abs(p.whole - p.value());
    const double scale = std::max({std::abs(p.a), std::abs(p.b), 1e-300});
    const bool too_narrow = (p.b - p.a) <= 64.0 * kEps * scale;
    const bool roundoff = p.err <= 64.0 * kEps * (std::abs(p.left) + std::abs(p.right));
    p.final = too_narrow || roundoff;
}

Estimate adaptive(const RadialFunction& g, std::span<const double> edges, const QuadratureSpec& spec)
{
    const auto& rule = gauss_legendre(spec.panel_order);
    std::vector<Panel> panels(edges.size() - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        panels[i].a = edges[i];
        panels[i].b = edges[i + 1];
    }
    if (static_cast<int>(panels.size()) > spec.max_panels)
        throw Error(ErrorKind::NonConvergent, "initial panel count exceeds max_panels");

    for_each_index(panels.size(), spec.exec, [&](std::size_t i) {
        panels[i].whole = apply_rule(g, panels[i].a, panels[i].b, rule);
        refine_panel(panels[i], g, rule);
    });

    for (;;) {
        CompensatedSum total;
        double err = 0.0;
        for (const auto& p : panels) {
            total.add(p.value());
            err += p.err;
        }
        const double value = total.value();
        const double tol = spec.target(value);
        if (err <= tol)
            return {value, err};

        const double share = tol / static_cast<double>(panels.size());
        std::vector<std::size_t> split;
        std::size_t worst = panels.size();
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (panels[i].final)
                continue;
            if (panels[i].err > share)
                split.push_back(i);
            if (worst == panels.size() || panels[i].err > panels[worst].err)
                worst = i;
        }
        if (worst == panels.size()) {
            std::ostringstream os;
            os << "roundoff-limited at error " << err << " > target " << tol;
            throw Error(ErrorKind::NonConvergent, os.str());
        }
        if (split.empty())
            split.push_back(worst);
        if (panels.size() + split.size() > static_cast<std::size_t>(spec.max_panels)) {
            std::ostringstream os;
            os << "max_panels (" << spec.max_panels << ") exhausted with error " << err
               << " > target " << tol;
            throw Error(ErrorKind::NonConvergent, os.str());
        }

        std::vector<Panel> children(2 * split.size());
        for (std::size_t k = 0; k < split.size(); ++k) {
            const Panel& parent = panels[split[k]];
            const double m = 0.5 * (parent.a + parent.b);
            children[2 * k] = Panel{parent.a, m, parent.left};
            children[2 * k + 1] = Panel{m, parent.b, parent.right};
        }
        for_each_index(children.size(), spec.exec,
                       [&](std::size_t i) { refine_panel(children[i], g, rule); });

        std::vector<Panel> next;
        next.reserve(panels.size() + split.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (k < split.size() && split[k] == i) {
                next.push_back(children[2 * k]);
                next.push_back(children[2 * k + 1]);
                ++k;
            } else {
                next.push_back(panels[i]);
            }
        }
        panels = std::move(next);
    }
}

// Scan abscissas a + 10^e for e in [-8, 10].
std::vector<double> scan_offsets(double per_decade)
{
    const int n = static_cast<int>(18.0 * per_decade) + 1;
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i)
        d[i] = std::pow(10.0, -8.0 + static_cast<double>(i) / per_decade);
    return d;
}

struct TailWindow {
    double end = 0.0;    // tail length in t
    double bound = 0.0;  // truncation remainder bound
};

// Walks h(t), t >= 0, in steps until the envelope over the last two units of
// t has dropped below cutoff. Samples are evaluated in batches.
TailWindow find_tail_end(const RadialFunction& h, double peak, double t_max, const QuadratureSpec& spec)
{
    constexpr double dt = 0.25;
    constexpr int window = 8;
    constexpr int batch = 32;
    const double decay = std::pow(10.0, -spec.tail_cutoff_decades);

    std::vector<double> mags;
    double peak_h = peak;
    for (int start = 0;; start += batch) {
        std::vector<double> ts(batch);
        for (int i = 0; i < batch; ++i)
            ts[i] = (start + i) * dt;
        if (ts.front() > t_max) {
            std::ostringstream os;
            os << "integrand has not decayed by x0*e^" << t_max;
            throw Error(ErrorKind::NonConvergent, os.str());
        }
        const auto vals = evaluate_grid(h, ts, spec.exec);
        for (int i = 0; i < batch; ++i) {
            const double m = std::abs(checked(vals[i], ts[i]));
            mags.push_back(m);
            peak_h = std::max(peak_h, m);
            const int n = static_cast<int>(mags.size());
            if (n < 2 * window + 1)
                continue;
            double recent = 0.0;
            double previous = 0.0;
            for (int j = n - window; j < n; ++j)
                recent = std::max(recent, mags[j]);
            for (int j = n - 2 * window; j < n - window; ++j)
                previous = std::max(previous, mags[j]);
            if (recent <= decay * peak_h) {
                TailWindow w;
                w.end = ts[i];
                if (recent > 0.0) {
                    const double rate = std::log(previous / recent) / (window * dt);
                    w.bound = rate > 1e-3 ? recent / rate : recent * 1e3;
                }
                return w;
            }
        }
    }
}

// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
// highest even-order entry that uses the last term.
double wynn_epsilon(std::span<const double> s)
{
    std::vector<double> prev(s.size() + 1, 0.0);
    std::vector<double> cur(s.begin(), s.end());
    double best = s.back();
    for (int j = 1; cur.size() > 1; ++j) {
        std::vector<double> next(cur.size() - 1);
        for (std::size_t k = 0; k < next.size(); ++k) {
            const double d = cur[k + 1] - cur[k];
            if (d == 0.0 || !std::isfinite(1.0 / d))
                return best;
            next[k] = prev[k + 1] + 1.0 / d;
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (j % 2 == 0) {
            if (!std::isfinite(cur.back()))
                return best;
            best = cur.back();
        }
    }
    return best;
}

// Envelope drop below which the remaining half-periods may be summed by
// extrapolation instead of explicit partitioning.
constexpr double kHeadDecades = 3.0;
constexpr std::size_t kMinTailPeriods = 64;
constexpr std::size_t kMaxTailTerms = 400;
constexpr std::size_t kWynnWindow = 21;

struct TailSum {
    bool converged = false;
    Estimate est;
};

// Sums the half-period integrals on [x0 + n h, x0 + (n + 1) h] and
// extrapolates the alternating partial sums.
TailSum extrapolated_tail(const RadialFunction& g, double x0, double h, std::size_t max_terms, double target,
                          const QuadratureSpec& spec)
{
    const auto& rule = gauss_legendre(spec.panel_order);
    constexpr std::size_t batch = 8;
    std::vector<double> partial;
    std::vector<double> estimates;
    CompensatedSum sum;
    double term_error = 0.0;
    for (std::size_t start = 0; start < max_terms; start += batch) {
        std::vector<Panel> terms(batch);
        for_each_index(batch, spec.exec, [&](std::size_t i) {
            Panel& p = terms[i];
            p.a = x0 + static_cast<double>(start + i) * h;
            p.b = p.a + h;
            p.whole = apply_rule(g, p.a, p.b, rule);
            refine_panel(p, g, rule);
        });
        for (const auto& p : terms) {
            sum.add(p.value());
            term_error += p.err;
            partial.push_back(sum.value());
            const std::size_t n = std::min(partial.size(), kWynnWindow);
            estimates.push_back(wynn_epsilon(std::span(partial).last(n)));
        }
        const std::size_t m = estimates.size();
        if (m < 3 * batch)
            continue;
        const double e = estimates[m - 1];
        const double spread = std::abs(e - estimates[m - 2]) + std::abs(e - estimates[m - 3]);
        if (spread + term_error <= 0.1 * target)
            return {true, {e, spread + term_error}};
    }
    return {};
}

// Adds the scan abscissas (four per decade) from three decades below the
// envelope peak up to x_end, and x_end itself, to the first partition panel, so that a
// half-period much wider than the integrand's own scale is still resolved.
void add_breakpoints(std::vector<double>& edges, std::span<const double> d, std::size_t at_peak, double x_end)
{
    const double first = edges.size() > 1 ? edges[1] : x_end;
    const double lo = d[at_peak] * 1e-3;
    std::vector<double> extra;
    for (std::size_t i = 0; i < d.size(); i += 4)
        if (d[i] > lo && d[i] < std::min(first, x_end))
            extra.push_back(d[i]);
    if (x_end < first)
        extra.push_back(x_end);
    if (extra.empty())
        return;
    edges.insert(edges.begin() + 1, extra.begin(), extra.end());
}

Estimate oscillatory(const RadialFunction& g, const RadialFunction& envelope, double first_edge,
                     double spacing, const QuadratureSpec& spec)
{
    const auto d = scan_offsets(16.0);
    const auto env = evaluate_grid(envelope, d, spec.exec);
    double peak = 0.0;
    std::size_t at_peak = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (std::abs(checked(env[i], d[i])) > peak) {
            peak = std::abs(env[i]);
            at_peak = i;
        }
    if (peak == 0.0)
        return {0.0, 0.0};
    const double cutoff = peak * std::pow(10.0, -spec.tail_cutoff_decades);
    std::size_t last = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (std::abs(env[i]) > cutoff)
            last = i;
    if (last + 1 >= d.size())
        throw Error(ErrorKind::NonConvergent, "oscillatory integrand does not decay");
    const double x_end = d[last + 1];

    // Slowly decaying envelopes: explicit head, extrapolated tail.
    std::size_t head = at_peak;
    while (head < last && std::abs(env[head]) > peak * std::pow(10.0, -kHeadDecades))
        ++head;
    const double x_head = first_edge + std::ceil(std::max(0.0, d[head] - first_edge) / spacing) * spacing;
    const double tail_periods = (x_end - x_head) / spacing;
    if (tail_periods > static_cast<double>(kMinTailPeriods) && x_head > 0.0) {
        std::vector<double> edges{0.0};
        if (first_edge > 0.0)
            edges.push_back(first_edge);
        const auto n_head = static_cast<std::size_t>(std::llround((x_head - first_edge) / spacing));
        for (std::size_t i = 1; i <= n_head; ++i)
            edges.push_back(first_edge + static_cast<double>(i) * spacing);
        if (edges.back() < x_head)
            edges.push_back(x_head);
        add_breakpoints(edges, d, at_peak, x_end);
        if (edges.size() + 1 < static_cast<std::size_t>(spec.max_panels)) {
            QuadratureSpec head_spec = spec;
            head_spec.rel_tol *= 0.5;
            head_spec.abs_tol *= 0.5;
            const Estimate h = adaptive(g, edges, head_spec);
            const std::size_t max_terms =
                std::min(kMaxTailTerms, static_cast<std::size_t>(tail_periods) + 1);
            const TailSum t = extrapolated_tail(g, edges.back(), spacing, max_terms, spec.target(h.value), spec);
            if (t.converged && h.error + t.est.error <= spec.target(h.value + t.est.value))
                return {h.value + t.est.value, h.error + t.est.error};
        }
    }

    const int per_period = std::max(1, spec.oscillatory_panels_per_period);
    const double step = spacing / per_period;
    const double n_steps = std::ceil(std::max(0.0, x_end - first_edge) / step);
    if (n_steps + 2.0 > static_cast<double>(spec.max_panels))
        throw Error(ErrorKind::NonConvergent, "oscillatory domain needs more than max_panels panels");

    std::vector<double> edges{0.0};
    if (first_edge > 0.0)
        edges.push_back(first_edge);
    for (int i = 1; i <= static_cast<int>(n_steps); ++i)
        edges.push_back(first_edge + i * step);
    if (edges.size() < 2)
        edges.push_back(step);
    add_breakpoints(edges, d, at_peak, x_end);

    Estimate est = adaptive(g, edges, spec);

    // Remainder beyond the last edge, bounded by the envelope's local
    // power-law slope in the logarithmic measure.
    const double e_end = std::abs(env[last + 1]);
    if (e_end > 0.0 && last + 2 < d.size()) {
        const double e_next = std::abs(env[last + 2]);
        const double slope = e_next > 0.0 ? std::log(e_end / e_next) / std::log(d[last + 2] / d[last + 1]) : 0.0;
        est.error += slope > 1e-3 ? e_end / slope : e_end * 1e3;
    }
    return est;
}

} // namespace

void QuadratureSpec::validate() const
{
    const bool ok = rel_tol > 0.0 && abs_tol > 0.0 && panel_order >= 2 && max_panels >= 1 &&
                    tail_cutoff_decades > 0.0 && oscillatory_panels_per_period >= 1;
    if (!ok)
        throw Error(ErrorKind::ConfigError,
                    "QuadratureSpec requires rel_tol > 0, abs_tol > 0, panel_order >= 2, "
                    "max_panels >= 1, tail_cutoff_decades > 0, oscillatory_panels_per_period >= 1");
}

double QuadratureSpec::target(double value) const
{
    return std::max(rel_tol * std::abs(value), abs_tol);
}

double xlogx(double f)
{
    return f <= kUnderflowThreshold ? 0.0 : f * std::log(f);
}

double sph_j0(double t)
{
    const double at = std::abs(t);
    if (at < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
    }
    return std::sin(t) / t;
}

const GaussLegendreRule& gauss_legendre(int order)
{
    if (order < 2)
        throw Error(ErrorKind::ConfigError, "Gauss-Legendre order must be >= 2");
    static std::mutex guard;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(guard);
    auto& slot = cache[order];
    if (slot)
        return *slot;

    auto rule = std::make_unique<GaussLegendreRule>();
    rule->nodes.resize(order);
    rule->weights.resize(order);
    const int n = order;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule->nodes[i] = -x;
        rule->nodes[n - 1 - i] = x;
        rule->weights[i] = w;
        rule->weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule->nodes[n / 2] = 0.0;
    slot = std::move(rule);
    return *slot;
}

Estimate integrate_interval(const RadialFunction& f, double a, double b, const QuadratureSpec& spec)
{
    const double edges[] = {a, b};
    return integrate_panels(f, edges, spec);
}

Estimate integrate_panels(const RadialFunction& f, std::span<const double> edges, const QuadratureSpec& spec)
{
    spec.validate();
    if (edges.size() < 2 || !std::is_sorted(edges.begin(), edges.end()))
        throw Error(ErrorKind::ConfigError, "integrate_panels needs at least two sorted edges");
    if (edges.front() == edges.back())
        return {0.0, 0.0};
    return adaptive(f, edges, spec);
}

Estimate integrate_semi_infinite(const RadialFunction& f, double a, const QuadratureSpec& spec)
{
    spec.validate();

    // Locate the peak of the integrand in the logarithmic measure |f| * (x - a).
    const auto d = scan_offsets(8.0);
    std::vector<double> xs(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        xs[i] = a + d[i];
    const auto fs = evaluate_grid(f, xs, spec.exec);
    double peak = 0.0;
    double d0 = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double m = std::abs(checked(fs[i], xs[i])) * d[i];
        if (m > peak) {
            peak = m;
            d0 = d[i];
        }
    }
    if (peak == 0.0)
        return {0.0, 0.0};
    if (d0 == d.back())
        throw Error(ErrorKind::NonConvergent, "integrand mass still growing at the end of the scan");

    const RadialFunction tail = [&f, a, d0](double t) {
        const double x = d0 * std::exp(t);
        return f(a + x) * x;
    };
    const double t_max = std::log(std::numeric_limits<double>::max() / 4.0) - std::log(d0);
    const TailWindow w = find_tail_end(tail, peak, t_max, spec);

    // Head [a, a + d0] in x, tail in t = u - d0, glued at u = d0.
    const RadialFunction g = [&f, &tail, a, d0](double u) {
        return u <= d0 ? f(a + u) : tail(u - d0);
    };
    std::vector<double> edges;
    for (int i = 0; i <= 4; ++i)
        edges.push_back(d0 * i / 4.0);
    const int tail_panels = std::max(1, static_cast<int>(std::ceil(w.end)));
    for (int i = 1; i <= tail_panels; ++i)
        edges.push_back(d0 + w.end * i / tail_panels);

    Estimate est = adaptive(g, edges, spec);
    est.error += w.bound;
    return est;
}

Estimate integrate_radial(const RadialFunction& f, int weight_power, const QuadratureSpec& spec)
{
    switch (weight_power) {
    case 0:
        return integrate_semi_infinite(f, 0.0, spec);
    case 2:
        return integrate_semi_infinite([&f](double x) { return f(x) * x * x; }, 0.0, spec);
    default:
        throw Error(ErrorKind::ConfigError, "integrate_radial supports weight_power 0 or 2");
    }
}

Estimate bessel_j0_transform(const RadialFunction& f, double q, const QuadratureSpec& spec)
{
    spec.validate();
    if (!(q >= 0.0))
        throw Error(ErrorKind::ConfigError, "bessel_j0_transform needs q >= 0");
    if (q == 0.0) {
        const Estimate e = integrate_radial(f, 2, spec);
        return {kFourPi * e.value, kFourPi * e.error};
    }
    const RadialFunction g = [&f, q](double x) { return f(x) * x * x * sph_j0(q * x); };
    const RadialFunction envelope = [&f, q](double x) {
        return std::abs(f(x)) * x * x * x * std::min(1.0, 1.0 / (q * x));
    };
    const Estimate e = oscillatory(g, envelope, 0.0, std::numbers::pi / q, spec);
    return {kFourPi * e.value, kFourPi * e.error};
}

Estimate cosine_transform(const RadialFunction& f, double q, const QuadratureSpec& spec)
{
    spec.validate();
    if (!(q >= 0.0))
        throw Error(ErrorKind::ConfigError, "cosine_transform needs q >= 0");
    if (q == 0.0) {
        const Estimate e = integrate_semi_infinite(f, 0.0, spec);
        return {2.0 * e.value, 2.0 * e.error};
    }
    const RadialFunction g = [&f, q](double x) { return f(x) * std::cos(q * x); };
    const RadialFunction envelope = [&f](double x) { return std::abs(f(x)) * x; };
    const double spacing = std::numbers::pi / q;
    const Estimate e = oscillatory(g, envelope, 0.5 * spacing, spacing, spec);
    return {2.0 * e.value, 2.0 * e.error};
}

Estimate integrate_2d_radial(const PairFunction& f, const QuadratureSpec& spec)
{
    spec.validate();
    QuadratureSpec inner = spec;
    inner.rel_tol = 0.1 * spec.rel_tol;
    inner.abs_tol = 0.1 * spec.abs_tol;
    inner.exec = Exec::serial;

    const RadialFunction outer = [&f, &inner](double x1) {
        if (x1 == 0.0)
            return 0.0;
        const RadialFunction row = [&f, x1](double x2) { return f(x1, x2) * x2 * x2; };
        return integrate_semi_infinite(row, 0.0, inner).value * x1 * x1;
    };
    const Estimate e = integrate_semi_infinite(outer, 0.0, spec);
    constexpr double w = kFourPi * kFourPi;
    const double inner_err = inner.rel_tol * std::abs(e.value) + inner.abs_tol;
    return {w * e.value, w * (e.error + inner_err)};
}

} // namespace sfent
