#pragma once

// CSV and JSON emission. Floats carry 17 significant digits so values
// round-trip exactly; unrequested measures are NaN in CSV and null in JSON.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symfloq/entangle.hpp"
#include "symfloq/harness/sweep.hpp"

namespace symfloq {

inline constexpr const char* kSweepHeader = "n,j,tau,theta0,phi0,period,avg_s_lin,avg_s_vn,avg_conc,ratio,drift";
inline constexpr const char* kSeriesHeader = "step,s_lin,s_vn,conc";

inline std::string fmt17(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepResultRow>& rows) {
    os << kSweepHeader << '\n';
    for (const auto& r : rows)
        os << r.n << ',' << fmt17(r.j) << ',' << fmt17(r.tau) << ',' << fmt17(r.theta0) << ',' << fmt17(r.phi0) << ','
           << r.period << ',' << fmt17(r.avg_s_lin) << ',' << fmt17(r.avg_s_vn) << ',' << fmt17(r.avg_conc) << ','
           << fmt17(r.ratio) << ',' << fmt17(r.drift) << '\n';
}

inline void write_series_csv(std::ostream& os, const std::vector<StepRecord>& steps) {
    os << kSeriesHeader << '\n';
    for (const auto& s : steps)
        os << s.n << ',' << fmt17(s.s_lin) << ',' << fmt17(s.s_vn) << ',' << fmt17(s.conc) << '\n';
}

namespace detail {
inline nlohmann::json num(double x) { return std::isnan(x) ? nlohmann::json(nullptr) : nlohmann::json(x); }
}  // namespace detail

inline nlohmann::json sweep_json(const std::vector<SweepResultRow>& rows) {
    using detail::num;
    auto a = nlohmann::json::array();
    for (const auto& r : rows)
        a.push_back({{"n", r.n}, {"j", num(r.j)}, {"tau", num(r.tau)}, {"theta0", num(r.theta0)},
                     {"phi0", num(r.phi0)}, {"period", r.period}, {"avg_s_lin", num(r.avg_s_lin)},
                     {"avg_s_vn", num(r.avg_s_vn)}, {"avg_conc", num(r.avg_conc)}, {"ratio", num(r.ratio)},
                     {"drift", num(r.drift)}});
    return a;
}

inline nlohmann::json series_json(const std::vector<StepRecord>& steps) {
    using detail::num;
    auto a = nlohmann::json::array();
    for (const auto& s : steps)
        a.push_back({{"step", s.n}, {"s_lin", num(s.s_lin)}, {"s_vn", num(s.s_vn)}, {"conc", num(s.conc)}});
    return a;
}

// nlohmann prints doubles with the shortest round-trip form (max_digits10).
inline void write_json(std::ostream& os, const nlohmann::json& j) { os << j.dump(1) << '\n'; }

}  // namespace symfloq
