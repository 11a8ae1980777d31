#include "unavoidable/thresholds.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace unavoidable {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

constexpr unsigned kMaxBits = 1u << 28;

Threshold compose(const Threshold& inner, const std::function<Threshold(const BigInt&)>& outer) {
  if (std::holds_alternative<Unbounded>(inner)) return Unbounded{};
  return outer(std::get<BigInt>(inner));
}

}  // namespace

BigInt f_shortp(const BigInt& q, const BigInt& r) {
  require(q >= 2 && r >= 2, "f_shortp needs q >= 2 and r >= 2");
  const BigInt d = 1 + (q - 2) * (r - 1);
  const BigInt base = d - 1;
  const BigInt terms = q - 1;
  if (base == 0) return 2;
  if (base == 1) return 2 + terms;
  const auto base_bits = static_cast<unsigned>(msb(base)) + 1;
  if (terms > kMaxBits || terms * base_bits > kMaxBits) {
    throw std::overflow_error("f_shortp value too large to represent");
  }
  const auto k = static_cast<unsigned>(terms);
  return 2 + base * (boost::multiprecision::pow(base, k) - 1) / (base - 1);
}

BigInt f_bridges(const BigInt& r) {
  require(r >= 4, "f_bridges needs r >= 4");
  return (r - 2) + (r - 4) * (r - 4) + 1;
}

BigInt f_longPmessyL(const BigInt& r) { return f_bridges(r); }

BigInt ramsey_upper(const BigInt& q) {
  require(q >= 1, "ramsey_upper needs q >= 1");
  const BigInt k = q - 1;
  if (k > kMaxBits) throw std::overflow_error("ramsey_upper value too large to represent");
  BigInt value = 1;
  for (BigInt i = 1; i <= k; ++i) value = value * (k + i) / i;
  return value;
}

BigInt f_dist(const BigInt& r, const BigInt& s) {
  require(r >= 4 && s >= 3, "f_dist needs r >= 4 and s >= 3");
  return 2 * ((s - 3) * (r - 4) + (s - 2)) + r - 5;
}

BigInt f_crossrungs(const BigInt& r, const BigInt& s) {
  const BigInt m1 = f_dist(r, s) - 1;
  const BigInt m2 = (r - 4) * (s - 3) + (s - 2);
  return m1 * m2 + (m1 + 1) * (r - 4) - 1;
}

BigInt f_spans(const BigInt& r, const BigInt& s) {
  return 2 * (f_crossrungs(r, s) + 2 * f_dist(r, s) - 2);
}

BigInt f_manycross(const BigInt& q, const BigInt& w) {
  require(q > 3 && w >= 1, "f_manycross needs q > 3 and w >= 1");
  const BigInt F = f_spans(q, q);
  const BigInt qq = q * q + q;
  return 4 * (F + 1) * qq + 2 * (w - 1) * F + 2 * (2 * F + 1) * qq * (w - 2);
}

BigInt f_messyfinite(const BigInt& t) {
  require(t >= 3, "f_messyfinite needs t >= 3");
  const BigInt even = (t % 2 == 0) ? t : t + 1;
  return f_manycross(even, even / 2 - 1);
}

Threshold f_longP(const BigInt& q, const BigInt& r, const ThresholdConfig& config) {
  require(q >= 1 && r >= 1, "f_longP needs q >= 1 and r >= 1");
  if (!config.grs) return Unbounded{};
  return config.grs(BigInt(2), ramsey_upper(q), r);
}

Threshold f_longp(const BigInt& p, const BigInt& q, const ThresholdConfig& config) {
  return f_longP(p, f_bridges(q), config);
}

Threshold f_messy_to_clean(const BigInt& t, const ThresholdConfig& config) {
  return f_longp(t, f_messyfinite(t), config);
}

Threshold f_main(const BigInt& r, const ThresholdConfig& config) {
  require(r >= 3, "f_main needs r >= 3");
  return compose(f_messy_to_clean(r, config), [&](const BigInt& q) -> Threshold { return f_shortp(q, r); });
}

std::string to_string(const Threshold& t) {
  if (std::holds_alternative<Unbounded>(t)) return "unbounded";
  return std::get<BigInt>(t).str();
}

std::size_t saturate(const BigInt& value) {
  if (value < 0) return 0;
  if (value >= BigInt(std::numeric_limits<std::size_t>::max())) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(value);
}

std::size_t saturate(const Threshold& t) {
  if (std::holds_alternative<Unbounded>(t)) return std::numeric_limits<std::size_t>::max();
  return saturate(std::get<BigInt>(t));
}

bool at_least(std::size_t n, const Threshold& t) {
  if (std::holds_alternative<Unbounded>(t)) return false;
  return BigInt(n) >= std::get<BigInt>(t);
}

namespace {

using Unary = BigInt (*)(const BigInt&);
using Binary = BigInt (*)(const BigInt&, const BigInt&);

struct Entry {
  std::size_t arity;
  std::function<Threshold(std::span<const BigInt>, const ThresholdConfig&)> eval;
};

const std::map<std::string, Entry, std::less<>>& registry() {
  static const std::map<std::string, Entry, std::less<>> table = [] {
    std::map<std::string, Entry, std::less<>> m;
    auto unary = [&](const char* name, Unary f) {
      m[name] = {1, [f](std::span<const BigInt> a, const ThresholdConfig&) -> Threshold { return f(a[0]); }};
    };
    auto binary = [&](const char* name, Binary f) {
      m[name] = {2, [f](std::span<const BigInt> a, const ThresholdConfig&) -> Threshold { return f(a[0], a[1]); }};
    };
    binary("f_shortp", f_shortp);
    unary("f_bridges", f_bridges);
    unary("f_longPmessyL", f_longPmessyL);
    unary("ramsey_upper", ramsey_upper);
    binary("f_dist", f_dist);
    binary("f_crossrungs", f_crossrungs);
    binary("f_spans", f_spans);
    binary("f_manycross", f_manycross);
    unary("f_messyfinite", f_messyfinite);
    m["f_longP"] = {2, [](std::span<const BigInt> a, const ThresholdConfig& c) { return f_longP(a[0], a[1], c); }};
    m["f_longp"] = {2, [](std::span<const BigInt> a, const ThresholdConfig& c) { return f_longp(a[0], a[1], c); }};
    m["f_messy_to_clean"] = {1, [](std::span<const BigInt> a, const ThresholdConfig& c) {
                               return f_messy_to_clean(a[0], c);
                             }};
    m["f_main"] = {1, [](std::span<const BigInt> a, const ThresholdConfig& c) { return f_main(a[0], c); }};
    return m;
  }();
  return table;
}

}  // namespace

Threshold evaluate_threshold(std::string_view name, std::span<const BigInt> args, const ThresholdConfig& config) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown threshold function: " + std::string(name));
  if (args.size() != it->second.arity) {
    throw std::invalid_argument(std::string(name) + " takes " + std::to_string(it->second.arity) + " argument(s)");
  }
  return it->second.eval(args, config);
}

std::vector<std::string> threshold_names() {
  std::vector<std::string> out;
  for (const auto& [name, entry] : registry()) out.push_back(name);
  return out;
}

ThresholdConfig parse_grs_config(std::string_view spec) {
  if (spec == "none" || spec.empty()) return {};
  if (spec == "identity") {
    return {[](const BigInt&, const BigInt&, const BigInt& r) { return r; }};
  }
  constexpr std::string_view kConst = "const:";
  if (spec.substr(0, kConst.size()) == kConst) {
    BigInt value;
    try {
      value = BigInt(std::string(spec.substr(kConst.size())));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid GRS constant");
    }
    return {[value](const BigInt&, const BigInt&, const BigInt&) { return value; }};
  }
  throw std::invalid_argument("unknown GRS bound: " + std::string(spec));
}

}  // namespace unavoidable
