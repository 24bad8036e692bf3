#include "monocurve/curve.hpp"

#include <array>
#include <charconv>

namespace monocurve {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_number(std::string_view token, std::string_view whole) {
  token = trim(token);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw CurveError("malformed token '" + std::string(whole) + "' in exponent set");
  }
  return value;
}

}  // namespace

MonomialCurve MonomialCurve::make(std::int64_t degree, std::span<const Interval> raw_exponents) {
  for (const Interval& iv : raw_exponents) {
    if (iv.lo > iv.hi) {
      throw CurveError("exponent range " + std::to_string(iv.lo) + "-" + std::to_string(iv.hi) +
                       " has lo > hi");
    }
    if (iv.lo < 0) throw CurveError("exponents must be non-negative");
  }
  return make(degree, IntervalSet::canonicalize(raw_exponents));
}

MonomialCurve MonomialCurve::make(std::int64_t degree, const IntervalSet& exponents) {
  if (degree < 1) throw CurveError("degree must be at least 1, got " + std::to_string(degree));
  if (!exponents.contains(0)) throw CurveError("exponent set must contain 0 (the monomial y^d)");
  if (exponents.max() > degree) {
    throw CurveError("exponent " + std::to_string(exponents.max()) + " exceeds degree " +
                     std::to_string(degree));
  }
  if (!exponents.contains(degree)) {
    throw CurveError("exponent set must contain d = " + std::to_string(degree) + " (the monomial x^d)");
  }
  return MonomialCurve(degree, exponents);
}

MonomialCurve MonomialCurve::parse(std::int64_t degree, std::string_view set_text) {
  return make(degree, parse_set_text(set_text));
}

std::vector<std::int64_t> MonomialCurve::endpoints() const {
  std::vector<std::int64_t> out;
  out.reserve(2 * exponents_.interval_count());
  for (const Interval& iv : exponents_.intervals()) {
    out.push_back(iv.lo);
    out.push_back(iv.hi);
  }
  return out;
}

std::string MonomialCurve::set_text() const { return format_set_text(exponents_); }

MonomialCurve mirror(const MonomialCurve& curve) {
  return MonomialCurve::make(curve.degree(), curve.exponents().reflected(curve.degree()));
}

IntervalSet parse_set_text(std::string_view text) {
  std::vector<Interval> raw;
  if (trim(text).empty()) throw CurveError("empty exponent set");
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    if (token.empty()) throw CurveError("empty token in exponent set");
    const auto dash = token.find('-', 1);
    if (dash == std::string_view::npos) {
      const std::int64_t v = parse_number(token, token);
      raw.push_back({v, v});
    } else {
      const std::int64_t lo = parse_number(token.substr(0, dash), token);
      const std::int64_t hi = parse_number(token.substr(dash + 1), token);
      raw.push_back({lo, hi});
    }
    if (raw.back().lo < 0) throw CurveError("exponents must be non-negative");
    if (raw.back().lo > raw.back().hi) {
      throw CurveError("range '" + std::string(token) + "' has lo > hi");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return IntervalSet::canonicalize(raw);
}

std::string format_set_text(const IntervalSet& set) {
  std::string out;
  for (const Interval& iv : set.intervals()) {
    if (!out.empty()) out += ',';
    out += std::to_string(iv.lo);
    if (iv.hi != iv.lo) out += "-" + std::to_string(iv.hi);
  }
  return out;
}

namespace {

constexpr std::array<std::pair<CaseKind, std::string_view>, 8> kCaseNames{{
    {CaseKind::TwoGenerators, "TwoGenerators"},
    {CaseKind::A, "A"},
    {CaseKind::BPoint, "Bpoint"},
    {CaseKind::B, "B"},
    {CaseKind::C, "C"},
    {CaseKind::D, "D"},
    {CaseKind::E, "E"},
    {CaseKind::General, "General"},
}};

}  // namespace

std::string_view to_string(CaseKind kind) {
  for (const auto& [k, name] : kCaseNames) {
    if (k == kind) return name;
  }
  return "General";
}

std::optional<CaseKind> parse_case_kind(std::string_view name) {
  for (const auto& [k, n] : kCaseNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string CaseLabel::params_text() const {
  std::string out;
  auto add = [&out](char name, std::int64_t v) {
    if (!out.empty()) out += ';';
    out += name;
    out += '=';
    out += std::to_string(v);
  };
  switch (kind) {
    case CaseKind::A:
    case CaseKind::BPoint:
      add('a', a);
      break;
    case CaseKind::B:
    case CaseKind::C:
      add('a', a);
      add('b', b);
      break;
    case CaseKind::D:
      add('a', a);
      add('b', b);
      add('c', c);
      break;
    case CaseKind::E:
      add('a', a);
      add('b', b);
      add('c', c);
      add('e', e);
      break;
    case CaseKind::TwoGenerators:
    case CaseKind::General:
      break;
  }
  return out;
}

CaseLabel classify(const MonomialCurve& curve) {
  const std::int64_t d = curve.degree();
  const auto& ivs = curve.exponents().intervals();
  CaseLabel label;

  if (ivs.size() == 1) {
    // [0, d]; for d = 1 this is also {0, d}.
    label.kind = d == 1 ? CaseKind::TwoGenerators : CaseKind::General;
    return label;
  }

  if (ivs.size() == 2) {
    const std::int64_t left = ivs[0].hi;
    const std::int64_t right = ivs[1].lo;
    if (left == 0 && right == d) {
      label.kind = CaseKind::TwoGenerators;
    } else if (left == 0) {
      label.kind = CaseKind::A;
      label.a = right;
    } else if (right == d) {
      label.kind = CaseKind::A;
      label.mirrored = true;
      label.a = d - left;
    } else {
      label.kind = CaseKind::C;
      label.a = left;
      label.b = right;
    }
    return label;
  }

  if (ivs.size() == 3) {
    const std::int64_t left = ivs[0].hi;
    const Interval mid = ivs[1];
    const std::int64_t right = ivs[2].lo;
    if (left == 0 && right == d) {
      label.kind = mid.lo == mid.hi ? CaseKind::BPoint : CaseKind::B;
      label.a = mid.lo;
      if (label.kind == CaseKind::B) label.b = mid.hi;
    } else if (left == 0) {
      label.kind = CaseKind::D;
      label.a = mid.lo;
      label.b = mid.hi;
      label.c = right;
    } else if (right == d) {
      label.kind = CaseKind::D;
      label.mirrored = true;
      label.a = d - mid.hi;
      label.b = d - mid.lo;
      label.c = d - left;
    } else {
      label.kind = CaseKind::E;
      label.a = left;
      label.b = mid.lo;
      label.c = mid.hi;
      label.e = right;
    }
    return label;
  }

  return label;
}

}  // namespace monocurve
