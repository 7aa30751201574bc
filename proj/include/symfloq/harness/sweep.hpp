#pragma once

// Parameter sweeps over initial states and Ising strengths. Points are
// independent; a fixed pool of workers claims indices from an atomic counter
// and writes into a preallocated slot, so output order is the grid order.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "symfloq/entangle.hpp"
#include "symfloq/floquet.hpp"
#include "symfloq/oracle.hpp"
#include "symfloq/symbasis.hpp"

namespace symfloq {

enum class Backend { Symmetric, Brute };

struct RunOptions {
    double tau = pi / 4;
    long long window = kDefaultWindow;  // long-window length when no period exists
    long long period_max = kDefaultPeriodMax;
    double tol = kDefaultPeriodTol;
    Measures measures;
    Backend backend = Backend::Symmetric;
    bool window_only = false;  // skip period detection and always use the long window
};

struct SweepResultRow {
    int n = 0;
    double j = 0, tau = 0, theta0 = 0, phi0 = 0;
    long long period = -1;
    double avg_s_lin = 0, avg_s_vn = 0, avg_conc = 0, ratio = 0, drift = 0;
};

inline constexpr double kMaxLinearEntropy = 0.5;

// Operator data shared read-only by every point with the same (N, J, tau).
struct PreparedOperator {
    FloquetParams floquet;
    BasisMap basis;
    BlockUnitary u;
    std::optional<long long> period;
};

inline PreparedOperator prepare_operator(int n, double J, const RunOptions& o) {
    const FloquetParams f{n, J, o.tau};
    f.validate();
    BasisMap m = make_basis_map(n);
    BlockUnitary u = build_floquet(f, m);
    const auto T = operator_period(u, o.period_max, o.tol);
    return {f, std::move(m), std::move(u), T};
}

// One averaged point. With an exact operator period T the horizon is 3T+1
// steps and the series period is searched there; otherwise the long window
// is simulated and still searched for a period before falling back.
inline SweepResultRow run_point(const PreparedOperator& op, double theta0, double phi0, const RunOptions& o) {
    const int n = op.floquet.n_qubits;
    const CoherentParams p{n, theta0, phi0};
    p.validate();
    const long long horizon = (op.period && !o.window_only) ? 3 * *op.period + 1 : o.window;

    EntanglementSeries s{p, op.floquet, o.measures, {}, op.period};
    if (o.backend == Backend::Brute)
        s.steps = brute_series(p, op.floquet, horizon, o.measures);
    else
        s.steps = series_records(coherent_to_phi(p), op.u, op.basis, horizon, o.measures);

    const auto P = o.window_only ? std::nullopt : series_period(s, o.tol);
    const AveragedRecord a =
        P ? average_first(s, *P, AverageMode::ExactPeriod) : average_first(s, o.window, AverageMode::LongWindow);
    return {n, op.floquet.ising_strength, op.floquet.kick_period, theta0, phi0, P ? *P : -1,
            a.s_lin, a.s_vn, a.conc, a.s_lin / kMaxLinearEntropy, a.drift};
}

inline SweepResultRow run_point(int n, double J, double theta0, double phi0, const RunOptions& o) {
    return run_point(prepare_operator(n, J, o), theta0, phi0, o);
}

inline int worker_count(size_t jobs) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SYMFLOQ_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return static_cast<int>(std::max<size_t>(1, std::min<size_t>(hw, jobs)));
}

// Runs fn(i) for i in [0, count) on the pool; the first exception is rethrown.
template <class R>
std::vector<R> parallel_map(size_t count, const std::function<R(size_t)>& fn) {
    std::vector<R> out(count);
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (size_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lk(err_mu);
                if (!err) err = std::current_exception();
                next = count;
            }
        }
    };
    const int w = worker_count(count);
    if (w == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < w; ++k) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);
    return out;
}

struct GridSpec {
    std::vector<int> n_qubits{4};
    std::vector<double> js{1.0};
    int grid_theta = 101;
    int grid_phi = 101;
    RunOptions run;

    void validate() const {
        if (grid_theta < 2 || grid_phi < 2) throw std::invalid_argument("grid sizes must be >= 2");
        if (n_qubits.empty() || js.empty()) throw std::invalid_argument("need at least one N and one J");
    }
};

inline double grid_theta(int i, int g) { return i == g - 1 ? pi : pi * i / (g - 1); }
inline double grid_phi(int j, int g) { return j == g - 1 ? pi : -pi + 2 * pi * j / (g - 1); }

// Rows ordered by N, then J, then theta0, then phi0.
inline std::vector<SweepResultRow> run_grid(const GridSpec& g) {
    g.validate();
    std::vector<PreparedOperator> ops;
    for (int n : g.n_qubits)
        for (double J : g.js) ops.push_back(prepare_operator(n, J, g.run));
    const size_t per = size_t(g.grid_theta) * g.grid_phi;
    return parallel_map<SweepResultRow>(ops.size() * per, [&](size_t idx) {
        const size_t k = idx % per;
        const int it = int(k / g.grid_phi), ip = int(k % g.grid_phi);
        return run_point(ops[idx / per], grid_theta(it, g.grid_theta), grid_phi(ip, g.grid_phi), g.run);
    });
}

struct Extremum {
    double value = 0, theta0 = 0, phi0 = 0;
};

struct ExtremaReport {
    int n = 0;
    double j = 0;
    Extremum s_lin_min, s_lin_max, conc_min, conc_max;
};

inline std::vector<ExtremaReport> grid_extrema(const std::vector<SweepResultRow>& rows) {
    std::vector<ExtremaReport> out;
    for (const auto& r : rows) {
        auto it = std::find_if(out.begin(), out.end(), [&](const ExtremaReport& e) { return e.n == r.n && e.j == r.j; });
        if (it == out.end()) {
            const Extremum sl{r.avg_s_lin, r.theta0, r.phi0}, c{r.avg_conc, r.theta0, r.phi0};
            out.push_back({r.n, r.j, sl, sl, c, c});
            continue;
        }
        auto upd = [&](Extremum& e, double v, bool less) {
            if (std::isnan(v)) return;
            if (std::isnan(e.value) || (less ? v < e.value : v > e.value)) e = {v, r.theta0, r.phi0};
        };
        upd(it->s_lin_min, r.avg_s_lin, true);
        upd(it->s_lin_max, r.avg_s_lin, false);
        upd(it->conc_min, r.avg_conc, true);
        upd(it->conc_max, r.avg_conc, false);
    }
    return out;
}

// J values j_min + k*step up to j_max (inclusive), rounded to 1e-12 so that
// nominal values such as 0.5 and 1 are hit exactly.
inline std::vector<double> j_range(double j_min, double j_max, double step) {
    if (!(step > 0) || j_max < j_min) throw std::invalid_argument("J range needs step > 0 and j_max >= j_min");
    std::vector<double> js;
    for (long long k = 0;; ++k) {
        const double j = std::round((j_min + k * step) * 1e12) / 1e12;
        if (j > j_max + 1e-12) break;
        js.push_back(j);
    }
    return js;
}

struct JSweepSpec {
    std::vector<int> n_qubits{12};
    std::vector<double> js;
    std::vector<std::pair<double, double>> states{{0.0, 0.0}};
    RunOptions run;
};

// Rows ordered by N, then state, then J.
inline std::vector<SweepResultRow> run_j_sweep(const JSweepSpec& s) {
    if (s.js.empty() || s.states.empty() || s.n_qubits.empty()) throw std::invalid_argument("empty J sweep");
    const size_t nj = s.js.size(), ns = s.states.size();
    std::vector<PreparedOperator> ops;
    for (int n : s.n_qubits)
        for (double J : s.js) ops.push_back(prepare_operator(n, J, s.run));
    return parallel_map<SweepResultRow>(s.n_qubits.size() * ns * nj, [&](size_t idx) {
        const size_t in = idx / (ns * nj);
        const auto& st = s.states[(idx / nj) % ns];
        return run_point(ops[in * nj + idx % nj], st.first, st.second, s.run);
    });
}

struct DipReport {
    int n = 0;
    double theta0 = 0, phi0 = 0, j = 0;
    double ratio = 0;
    double baseline = 0;  // ratio at J = 0.7, else mean over J away from 1/2 and 1
    bool dip = false;     // ratio below baseline by more than the threshold
};

inline constexpr double kDipThreshold = 0.05;
inline constexpr double kDipReferenceJ = 0.7;

// Baseline is the ratio at J = 0.7 for the same N and state; sweeps that skip
// 0.7 fall back to the mean over J more than 0.1 away from both special values.
inline std::vector<DipReport> dip_report(const std::vector<SweepResultRow>& rows) {
    auto near = [](double a, double b) { return std::abs(a - b) < 1e-9; };
    std::vector<DipReport> out;
    for (const auto& r : rows) {
        if (!near(r.j, 0.5) && !near(r.j, 1.0)) continue;
        double sum = 0, ref = std::numeric_limits<double>::quiet_NaN();
        int cnt = 0;
        for (const auto& o : rows) {
            if (o.n != r.n || o.theta0 != r.theta0 || o.phi0 != r.phi0) continue;
            if (near(o.j, kDipReferenceJ)) ref = o.ratio;
            if (std::abs(o.j - 0.5) > 0.1 && std::abs(o.j - 1.0) > 0.1) {
                sum += o.ratio;
                ++cnt;
            }
        }
        const double base = !std::isnan(ref) ? ref : cnt ? sum / cnt : std::numeric_limits<double>::quiet_NaN();
        out.push_back({r.n, r.theta0, r.phi0, r.j, r.ratio, base, !std::isnan(base) && r.ratio < base - kDipThreshold});
    }
    return out;
}

}  // namespace symfloq
