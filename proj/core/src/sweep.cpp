#include "relopt/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "relopt/errors.hpp"

namespace relopt {

MethodChoice parse_method(const std::string& text) {
    if (text == "cf") return MethodChoice::ClosedForm;
    if (text == "mc") return MethodChoice::MonteCarlo;
    throw ParameterError("unknown method '" + text + "' (expected cf or mc)");
}

PricingResult price_run(const RunConfig& cfg, MethodChoice method, unsigned n_workers) {
    const bool has_closed_form = !std::holds_alternative<ShiftedTwoOuParams>(cfg.model_spec);
    switch (method) {
        case MethodChoice::ClosedForm:
            return price_closed_form(cfg.model_spec, cfg.contract, cfg.quad);
        case MethodChoice::MonteCarlo:
            return price_monte_carlo(cfg.model_spec, cfg.contract, cfg.mc, cfg.quad, n_workers);
        case MethodChoice::Auto:
            return has_closed_form
                       ? price_closed_form(cfg.model_spec, cfg.contract, cfg.quad)
                       : price_monte_carlo(cfg.model_spec, cfg.contract, cfg.mc, cfg.quad,
                                           n_workers);
    }
    throw ParameterError("unreachable method");
}

SweepAxis parse_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 4 && parts.size() != 5)
        throw ParameterError("axis '" + text + "': expected key:min:max:n[:log]");
    SweepAxis axis;
    axis.key = parts[0];
    try {
        axis.min = std::stod(parts[1]);
        axis.max = std::stod(parts[2]);
        axis.n_points = std::stoul(parts[3]);
    } catch (const std::exception&) {
        throw ParameterError("axis '" + text + "': min/max/n must be numeric");
    }
    if (parts.size() == 5) {
        if (parts[4] != "log")
            throw ParameterError("axis '" + text + "': trailing token must be 'log'");
        axis.log_scale = true;
    }
    if (axis.n_points < 2) throw ParameterError("axis '" + text + "': need n >= 2 points");
    if (!(axis.min < axis.max)) throw ParameterError("axis '" + text + "': need min < max");
    if (axis.log_scale && !(axis.min > 0.0))
        throw ParameterError("axis '" + text + "': log scale needs min > 0");
    return axis;
}

namespace {

std::vector<double> axis_grid(const SweepAxis& a) {
    std::vector<double> v(a.n_points);
    const double lo = a.log_scale ? std::log(a.min) : a.min;
    const double hi = a.log_scale ? std::log(a.max) : a.max;
    for (std::size_t i = 0; i < a.n_points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) /
                                  static_cast<double>(a.n_points - 1);
        v[i] = a.log_scale ? std::exp(x) : x;
    }
    return v;
}

} // namespace

SweepGrid run_sweep(const RunConfig& base, const SweepSpec& spec, MethodChoice method,
                    unsigned n_workers) {
    if (spec.axes.empty() || spec.axes.size() > 2)
        throw ParameterError("sweep needs 1 or 2 axes, got " + std::to_string(spec.axes.size()));

    SweepGrid grid;
    for (const auto& axis : spec.axes) {
        grid.axis_names.push_back(axis.key);
        grid.axis_values.push_back(axis_grid(axis));
    }

    // Build every grid config first: invariant violations surface before any
    // pricing work starts.
    std::vector<RunConfig> configs;
    if (spec.axes.size() == 1) {
        for (double v : grid.axis_values[0]) configs.push_back(with_override(base, spec.axes[0].key, v));
    } else {
        for (double v1 : grid.axis_values[0])
            for (double v2 : grid.axis_values[1]) {
                RunConfig c = with_override(base, spec.axes[0].key, v1);
                configs.push_back(with_override(c, spec.axes[1].key, v2));
            }
    }

    const std::size_t n = configs.size();
    grid.values.assign(n, 0.0);
    grid.bounds.assign(n, {});

    auto evaluate = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const PricingResult res = price_run(configs[i], method, 1);
            grid.values[i] = res.value;
            grid.bounds[i] = res.bounds;
        }
    };

    if (n_workers <= 1) {
        evaluate(0, n);
    } else {
        const std::size_t chunk = (n + n_workers - 1) / n_workers;
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            const std::size_t begin = std::min<std::size_t>(w * chunk, n);
            const std::size_t end = std::min<std::size_t>(begin + chunk, n);
            pool.emplace_back([&, w, begin, end] {
                try {
                    evaluate(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return grid;
}

void write_sweep_csv(const SweepGrid& grid, std::ostream& out) {
    for (const auto& name : grid.axis_names) out << name << ',';
    out << "value\n";
    char buf[32];
    auto fmt = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return std::string(buf);
    };
    if (grid.axis_values.size() == 1) {
        for (std::size_t i = 0; i < grid.axis_values[0].size(); ++i)
            out << fmt(grid.axis_values[0][i]) << ',' << fmt(grid.values[i]) << '\n';
    } else {
        for (std::size_t i = 0; i < grid.axis_values[0].size(); ++i)
            for (std::size_t j = 0; j < grid.axis_values[1].size(); ++j)
                out << fmt(grid.axis_values[0][i]) << ',' << fmt(grid.axis_values[1][j]) << ','
                    << fmt(grid.values[grid.index(i, j)]) << '\n';
    }
}

} // namespace relopt
