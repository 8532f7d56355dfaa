#include "recip/survey.hpp"

#include "recip/char4.hpp"
#include "recip/efficiency.hpp"
#include "recip/extension.hpp"
#include "recip/generators.hpp"
#include "recip/io.hpp"
#include "recip/spectral.hpp"
#include "recip/wellbehaved.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

namespace recip {

namespace {

std::uint64_t sample_seed(std::uint64_t master, std::uint64_t dim, std::uint64_t index) {
    return detail::mix64(master ^ detail::mix64(dim * 0x632be59bd9b4e019ull + index));
}

/// Runs fn(index) over [0, count) on `workers` threads. Results must be
/// written into per-index slots so aggregation stays order-independent.
void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || count < 2 * workers) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(i);
        });
    for (std::thread& t : pool)
        t.join();
}

} // namespace

std::vector<survey_row> run_survey(const survey_config& config) {
    if (config.samples_per_dim < 1)
        throw error(errc::order_too_small, "need at least one sample per dimension");
    for (int dim : config.dims)
        if (dim < 3)
            throw error(errc::order_too_small, "survey dimensions start at 3");

    std::vector<survey_row> rows;
    for (int dim : config.dims) {
        int samples = config.samples_per_dim;
        struct outcome {
            bool inefficient = false;
            bool sink = false;
            bool source = false;
            double lambda_gap = 0.0;
        };
        std::vector<outcome> outcomes(static_cast<std::size_t>(samples));
        parallel_for(samples, config.workers, [&](int index) {
            reciprocal_matrix a =
                random_reciprocal(static_cast<std::size_t>(dim), config.scale,
                                  sample_seed(config.seed, static_cast<std::uint64_t>(dim),
                                              static_cast<std::uint64_t>(index)));
            perron_result p = perron(a);
            efficiency_report report = is_efficient(a, p.vector);
            outcome& out = outcomes[static_cast<std::size_t>(index)];
            out.inefficient = !report.efficient;
            out.sink = out.inefficient && !report.sinks.empty();
            out.source = out.inefficient && !report.sources.empty();
            out.lambda_gap = p.eigenvalue - dim;
        });

        survey_row row;
        row.dim = dim;
        row.samples = samples;
        double gap_total = 0.0;
        for (const outcome& out : outcomes) { // sequential: worker-count independent
            row.inefficient_count += out.inefficient;
            row.sink_count += out.sink;
            row.source_count += out.source;
            gap_total += out.lambda_gap;
        }
        row.mean_lambda_gap = gap_total / samples;
        rows.push_back(row);
    }
    return rows;
}

std::string survey_csv(const std::vector<survey_row>& rows) {
    std::string out = "dim,samples,inefficient,sinks,sources,mean_lambda_gap\n";
    for (const survey_row& row : rows) {
        out += std::to_string(row.dim) + ',' + std::to_string(row.samples) + ',' +
               std::to_string(row.inefficient_count) + ',' + std::to_string(row.sink_count) +
               ',' + std::to_string(row.source_count) + ',' +
               format_double(row.mean_lambda_gap) + '\n';
    }
    return out;
}

namespace {

struct sweep_context {
    int samples;
    std::uint64_t seed;
    sweep_report report;

    std::uint64_t seed_for(int index) const {
        return sample_seed(seed, 0x73776565ull, static_cast<std::uint64_t>(index));
    }
    bool fail(const reciprocal_matrix& a, const std::string& why) {
        report.pass = false;
        report.counterexample = write_matrix_csv(a);
        report.detail = why;
        return false;
    }
};

std::size_t pick_order(std::uint64_t seed, std::size_t lo, std::size_t hi) {
    return lo + detail::mix64(seed ^ 0xabcdefull) % (hi - lo + 1);
}

bool sweep_ll1(sweep_context& ctx) {
    for (int i = 0; i < ctx.samples; ++i) {
        std::uint64_t s = ctx.seed_for(i);
        std::size_t n = pick_order(s, 2, 7);
        reciprocal_matrix a = random_reciprocal(n, 9.0, s);
        if (a.entry_total() < static_cast<double>(n * n) - 1e-9)
            return ctx.fail(a, "entry total below n^2");
        if (perron(a).eigenvalue < static_cast<double>(n) - 1e-9)
            return ctx.fail(a, "Perron eigenvalue below n");
    }
    return true;
}

bool sweep_lconswell(sweep_context& ctx) {
    for (int i = 0; i < ctx.samples; ++i) {
        std::uint64_t s = ctx.seed_for(i);
        reciprocal_matrix a = random_consistent(pick_order(s, 2, 7), 9.0, s);
        if (classify(a).kind == wb_kind::not_well_behaved)
            return ctx.fail(a, "consistent matrix classified not well-behaved");
    }
    return true;
}

bool sweep_t6(sweep_context& ctx) {
    // Consistent base, arbitrary reciprocal bordering: Perron stays efficient.
    for (int i = 0; i < ctx.samples; ++i) {
        std::uint64_t s = ctx.seed_for(i);
        std::size_t k = pick_order(s, 3, 6);
        reciprocal_matrix base = random_consistent(k, 9.0, s);
        std::mt19937_64 rng(detail::mix64(s ^ 0xb02de2ull));
        std::uniform_real_distribution<double> log_entry(-std::log(9.0), std::log(9.0));
        std::size_t n = k + 1;
        std::vector<double> entries(n * n, 1.0);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c)
                entries[r * n + c] = base(r, c);
            double v = std::exp(log_entry(rng));
            entries[r * n + k] = v;
            entries[k * n + r] = 1.0 / v;
        }
        reciprocal_matrix a = reciprocal_matrix::validate(std::move(entries), n);
        if (!is_efficient(a, perron(a).vector, 1e-12).efficient)
            return ctx.fail(a, "bordered consistent base with inefficient Perron vector");
    }
    return true;
}

bool sweep_c4(sweep_context& ctx) {
    // Inconsistent constant-row-sum base + constant border column:
    // inefficient with sink n.
    for (int i = 0; i < ctx.samples; ++i) {
        std::uint64_t s = ctx.seed_for(i);
        std::size_t k = pick_order(s, 3, 6);
        reciprocal_matrix raw = random_reciprocal(k, 9.0, s);
        if (is_consistent(raw))
            continue; // probability zero at scale 9
        reciprocal_matrix t = to_constant_row_sums(raw).second;
        std::mt19937_64 rng(detail::mix64(s ^ 0x0a0aull));
        std::uniform_real_distribution<double> log_entry(-std::log(9.0), std::log(9.0));
        extension_result ext = border_constant_column(t, std::exp(log_entry(rng)));
        efficiency_report report =
            is_efficient(ext.matrix, perron(ext.matrix).vector, 1e-12);
        if (report.efficient)
            return ctx.fail(ext.matrix, "constant-column border stayed efficient");
        if (std::find(report.sinks.begin(), report.sinks.end(), k) == report.sinks.end())
            return ctx.fail(ext.matrix, "vertex n is not a sink");
    }
    return true;
}

bool sweep_c27(sweep_context& ctx) {
    for (int i = 0; i < ctx.samples; ++i) {
        std::uint64_t s = ctx.seed_for(i);
        reciprocal_matrix a = random_reciprocal(4, i % 2 ? 3.0 : 9.0, s);
        efficiency_report report = is_efficient(a, perron(a).vector);
        if (!report.efficient != !report.sinks.empty())
            return ctx.fail(a, "order-4 sink equivalence violated");
    }
    return true;
}

bool sweep_t5(sweep_context& ctx) {
    for (int i = 0; i < ctx.samples; ++i) {
        std::uint64_t s = ctx.seed_for(i);
        reciprocal_matrix a = random_reciprocal(4, i % 2 ? 3.0 : 9.0, s);
        try {
            subvector_guarantee_4x4(a);
        } catch (const error&) {
            return ctx.fail(a, "no efficient Perron subvector found at order 4");
        }
    }
    return true;
}

bool sweep_thind(sweep_context& ctx) {
    // Two efficient (n-1)-subvectors imply the full vector is efficient.
    for (int i = 0; i < ctx.samples; ++i) {
        std::uint64_t s = ctx.seed_for(i);
        std::size_t n = pick_order(s, 4, 7);
        reciprocal_matrix a = random_reciprocal(n, 9.0, s);
        weight_vector w = [&] {
            if (i % 2)
                return perron(a).vector;
            std::mt19937_64 rng(detail::mix64(s ^ 0x77ull));
            std::uniform_real_distribution<double> log_entry(-std::log(9.0), std::log(9.0));
            std::vector<double> entries(n);
            for (double& v : entries)
                v = std::exp(log_entry(rng));
            return weight_vector(std::move(entries));
        }();
        std::vector<bool> profile = subvector_efficiency_profile(a, w);
        int efficient_subvectors = 0;
        for (bool entry : profile)
            efficient_subvectors += entry;
        if (efficient_subvectors >= 2 && !is_efficient(a, w).efficient)
            return ctx.fail(a, "two efficient subvectors but inefficient vector");
    }
    return true;
}

bool sweep_t2(sweep_context& ctx) {
    // Forward: not well-behaved base -> constant-row-sum extension has
    // inefficient e_n with sink n. Converse: e_{n-1} efficient for the base
    // and the extension inefficient -> base not well-behaved.
    for (int i = 0; i < ctx.samples; ++i) {
        std::uint64_t s = ctx.seed_for(i);
        std::size_t k = pick_order(s, 3, 6);
        reciprocal_matrix base = random_reciprocal(k, 9.0, s);
        extension_result ext = extend_constant_row_sums(base);
        weight_vector e_n(std::vector<double>(k + 1, 1.0));
        efficiency_report report = is_efficient(ext.matrix, e_n, 1e-12);
        bool nwb = classify(base).kind == wb_kind::not_well_behaved;
        if (nwb) {
            if (report.efficient)
                return ctx.fail(base, "not well-behaved base extended to efficient e_n");
            if (std::find(report.sinks.begin(), report.sinks.end(), k) == report.sinks.end())
                return ctx.fail(base, "vertex n is not a sink");
        } else if (is_efficient(base, weight_vector(std::vector<double>(k, 1.0)), 1e-12)
                       .efficient &&
                   !report.efficient) {
            return ctx.fail(base, "well-behaved base with efficient e_{n-1} extended to "
                                  "inefficient e_n");
        }
    }
    return true;
}

} // namespace

std::vector<std::string> theorem_sweep_names() {
    return {"ll1", "lconswell", "t2", "t6", "c4", "c27", "t5", "thind"};
}

sweep_report run_theorem_sweep(const std::string& name, int samples, std::uint64_t seed) {
    sweep_context ctx{samples, seed, sweep_report{name, samples, true, std::nullopt, ""}};
    bool (*runner)(sweep_context&) = nullptr;
    if (name == "ll1")
        runner = sweep_ll1;
    else if (name == "lconswell")
        runner = sweep_lconswell;
    else if (name == "t2")
        runner = sweep_t2;
    else if (name == "t6")
        runner = sweep_t6;
    else if (name == "c4")
        runner = sweep_c4;
    else if (name == "c27")
        runner = sweep_c27;
    else if (name == "t5")
        runner = sweep_t5;
    else if (name == "thind")
        runner = sweep_thind;
    else
        throw error(errc::unknown_property, "unknown property '" + name + "'");
    runner(ctx);
    return ctx.report;
}

} // namespace recip
