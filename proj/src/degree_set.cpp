#include "sgraph/degree_set.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace sgraph {

namespace {

std::uint64_t parse_uint(const std::string& s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty number");
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument(std::string(what) + ": bad integer '" + s + "'");
    std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
      throw std::invalid_argument(std::string(what) + ": integer overflow in '" + s + "'");
    v = v * 10 + d;
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

DegreeSet DegreeSet::parse(const std::string& spec, bool allow_trivial) {
  DegreeSet ds;
  std::string body = spec;
  std::optional<std::uint64_t> cut;

  auto bar = spec.find('|');
  if (bar != std::string::npos) {
    body = spec.substr(0, bar);
    std::string suffix = spec.substr(bar + 1);
    if (suffix.rfind("cut:", 0) != 0)
      throw std::invalid_argument("degree set: unknown suffix '" + suffix + "'");
    cut = parse_uint(suffix.substr(4), "degree set cutoff");
  }

  if (body == "even") {
    ds.kind_ = Kind::Even;
    ds.min_element_ = 0;
  } else if (body == "odd") {
    ds.kind_ = Kind::Odd;
    ds.min_element_ = 1;
  } else if (body.rfind("ge:", 0) == 0) {
    ds.kind_ = Kind::Tail;
    ds.min_element_ = parse_uint(body.substr(3), "degree set ge");
  } else if (body.rfind("set:", 0) == 0) {
    ds.kind_ = Kind::Explicit;
    for (const std::string& tok : split(body.substr(4), ','))
      ds.elements_.push_back(parse_uint(tok, "degree set element"));
    std::sort(ds.elements_.begin(), ds.elements_.end());
    ds.elements_.erase(std::unique(ds.elements_.begin(), ds.elements_.end()),
                       ds.elements_.end());
    if (ds.elements_.empty()) throw std::invalid_argument("degree set: empty list");
    ds.min_element_ = ds.elements_.front();
  } else if (body.rfind("pow2:", 0) == 0) {
    ds.kind_ = Kind::Pow2;
    std::uint64_t top = parse_uint(body.substr(5), "degree set pow2 cutoff");
    if (top < 1)
      throw std::invalid_argument("degree set: pow2 cutoff must be >= 1");
    for (std::uint64_t v = 1; v <= top; v *= 2) {
      ds.elements_.push_back(v);
      if (v > top / 2) break;
    }
    ds.min_element_ = 1;
  } else {
    throw std::invalid_argument("degree set: unrecognized spec '" + spec + "'");
  }

  if (cut) {
    if (ds.kind_ == Kind::Explicit || ds.kind_ == Kind::Pow2) {
      while (!ds.elements_.empty() && ds.elements_.back() > *cut) ds.elements_.pop_back();
      if (ds.elements_.empty())
        throw std::invalid_argument("degree set: cutoff " + std::to_string(*cut) +
                                    " empties the set");
    } else {
      if (*cut < ds.min_element_)
        throw std::invalid_argument("degree set: cutoff " + std::to_string(*cut) +
                                    " empties the set");
      // Pin the cutoff to the largest actual member so that label round-trips.
      std::uint64_t top = *cut;
      if (ds.kind_ == Kind::Even && top % 2 == 1) top -= 1;
      if (ds.kind_ == Kind::Odd && top % 2 == 0) top -= 1;
      if (top == ds.min_element_) {
        // Collapsed to a single element: normalize to an explicit singleton.
        ds.kind_ = Kind::Explicit;
        ds.elements_ = {top};
        ds.cutoff_.reset();
      } else {
        ds.cutoff_ = top;
      }
    }
  }

  if (ds.is_trivial_zero() && !allow_trivial)
    throw std::invalid_argument(
        "degree set: {0} admits only edgeless graphs; enable trivial mode to use it");

  ds.canonicalize_label();
  return ds;
}

void DegreeSet::canonicalize_label() {
  switch (kind_) {
    case Kind::Even: label_ = "even"; break;
    case Kind::Odd: label_ = "odd"; break;
    case Kind::Tail: label_ = "ge:" + std::to_string(min_element_); break;
    case Kind::Pow2: {
      label_ = "pow2:" + std::to_string(elements_.back());
      return;
    }
    case Kind::Explicit: {
      label_ = "set:";
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) label_ += ',';
        label_ += std::to_string(elements_[i]);
      }
      return;
    }
  }
  if (cutoff_) label_ += "|cut:" + std::to_string(*cutoff_);
}

bool DegreeSet::contains(std::uint64_t k) const {
  switch (kind_) {
    case Kind::Explicit:
    case Kind::Pow2:
      return std::binary_search(elements_.begin(), elements_.end(), k);
    case Kind::Even:
      return k % 2 == 0 && (!cutoff_ || k <= *cutoff_);
    case Kind::Odd:
      return k % 2 == 1 && (!cutoff_ || k <= *cutoff_);
    case Kind::Tail:
      return k >= min_element_ && (!cutoff_ || k <= *cutoff_);
  }
  return false;
}

std::optional<std::uint64_t> DegreeSet::max_element() const {
  if (kind_ == Kind::Explicit || kind_ == Kind::Pow2) return elements_.back();
  return cutoff_;
}

bool DegreeSet::all_even() const {
  switch (kind_) {
    case Kind::Even: return true;
    case Kind::Odd: return false;
    case Kind::Tail: return cutoff_ && *cutoff_ == min_element_ && min_element_ % 2 == 0;
    default:
      return std::all_of(elements_.begin(), elements_.end(),
                         [](std::uint64_t k) { return k % 2 == 0; });
  }
}

bool DegreeSet::all_odd() const {
  switch (kind_) {
    case Kind::Even: return false;
    case Kind::Odd: return true;
    case Kind::Tail: return cutoff_ && *cutoff_ == min_element_ && min_element_ % 2 == 1;
    default:
      return std::all_of(elements_.begin(), elements_.end(),
                         [](std::uint64_t k) { return k % 2 == 1; });
  }
}

bool DegreeSet::is_trivial_zero() const {
  return kind_ == Kind::Explicit && elements_.size() == 1 && elements_[0] == 0;
}

bool DegreeSet::is_singleton() const {
  if (kind_ == Kind::Explicit || kind_ == Kind::Pow2) return elements_.size() == 1;
  return cutoff_ && *cutoff_ == min_element_;
}

DegreeSet DegreeSet::shift_down() const {
  DegreeSet ds;
  switch (kind_) {
    case Kind::Even:
      ds.kind_ = Kind::Odd;
      ds.min_element_ = 1;
      if (cutoff_) {
        if (*cutoff_ == 0)
          throw std::invalid_argument("degree set: shift of {0} is empty");
        ds.cutoff_ = *cutoff_ - 1;
      }
      break;
    case Kind::Odd:
      ds.kind_ = Kind::Even;
      ds.min_element_ = 0;
      if (cutoff_) ds.cutoff_ = *cutoff_ - 1;
      break;
    case Kind::Tail:
      ds.kind_ = Kind::Tail;
      ds.min_element_ = min_element_ == 0 ? 0 : min_element_ - 1;
      if (cutoff_) ds.cutoff_ = *cutoff_ - 1;
      break;
    case Kind::Explicit:
    case Kind::Pow2:
      ds.kind_ = Kind::Explicit;
      for (std::uint64_t k : elements_)
        if (k >= 1) ds.elements_.push_back(k - 1);
      if (ds.elements_.empty())
        throw std::invalid_argument("degree set: shift of {0} is empty");
      ds.min_element_ = ds.elements_.front();
      break;
  }
  ds.canonicalize_label();
  return ds;
}

bool DegreeSet::admissible_n(std::uint64_t n) const {
  if (n == 0) return true;
  if (all_odd() && n % 2 == 1) return false;
  return true;
}

}  // namespace sgraph
