#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace unavoidable {

using BigInt = boost::multiprecision::cpp_int;

/// Marker for a bound that depends on an external Ramsey-type quantity
/// nobody has configured.
struct Unbounded {
  friend bool operator==(Unbounded, Unbounded) = default;
};
using Threshold = std::variant<BigInt, Unbounded>;

/// Upper bound on the order of a 2-connected graph forcing an induced path
/// of order r, a K_s subgraph or a K_{t,t} subgraph, called as (s, t, r).
using GrsBound = std::function<BigInt(const BigInt&, const BigInt&, const BigInt&)>;

struct ThresholdConfig {
  GrsBound grs;  // empty: compositions depending on it are Unbounded
};

// All functions below throw std::invalid_argument outside their domain and
// std::overflow_error when a value would not fit in memory.

/// 2 + sum_{i=1}^{q-1} (d-1)^i with d = 1 + (q-2)(r-1).
[[nodiscard]] BigInt f_shortp(const BigInt& q, const BigInt& r);
/// (r-2) + (r-4)^2 + 1, r >= 4.
[[nodiscard]] BigInt f_bridges(const BigInt& r);
[[nodiscard]] BigInt f_longPmessyL(const BigInt& r);
/// binom(2q-2, q-1).
[[nodiscard]] BigInt ramsey_upper(const BigInt& q);
[[nodiscard]] BigInt f_dist(const BigInt& r, const BigInt& s);
[[nodiscard]] BigInt f_crossrungs(const BigInt& r, const BigInt& s);
[[nodiscard]] BigInt f_spans(const BigInt& r, const BigInt& s);
/// Uses F = f_spans(q, q). For w = 1 the last summand is negative; the
/// formula is evaluated as written.
[[nodiscard]] BigInt f_manycross(const BigInt& q, const BigInt& w);
/// t is rounded up to an even t', then f_manycross(t', t'/2 - 1).
[[nodiscard]] BigInt f_messyfinite(const BigInt& t);

[[nodiscard]] Threshold f_longP(const BigInt& q, const BigInt& r, const ThresholdConfig& config);
[[nodiscard]] Threshold f_longp(const BigInt& p, const BigInt& q, const ThresholdConfig& config);
[[nodiscard]] Threshold f_messy_to_clean(const BigInt& t, const ThresholdConfig& config);
[[nodiscard]] Threshold f_main(const BigInt& r, const ThresholdConfig& config);

[[nodiscard]] std::string to_string(const Threshold& t);
/// Value clamped to SIZE_MAX; Unbounded maps to SIZE_MAX.
[[nodiscard]] std::size_t saturate(const Threshold& t);
[[nodiscard]] std::size_t saturate(const BigInt& value);
[[nodiscard]] bool at_least(std::size_t n, const Threshold& t);

/// Dispatch by name, for the command line. Throws std::invalid_argument on an
/// unknown name or wrong argument count.
[[nodiscard]] Threshold evaluate_threshold(std::string_view name, std::span<const BigInt> args,
                                           const ThresholdConfig& config);
[[nodiscard]] std::vector<std::string> threshold_names();

/// "none", "identity" (the bound returns r) or "const:N".
[[nodiscard]] ThresholdConfig parse_grs_config(std::string_view spec);

}  // namespace unavoidable
