/*
  laurent.cpp -- implementation of exact Laurent polynomial arithmetic.
*/

#include "laurent.h"

#include <algorithm>
#include <stdexcept>

#include "errors.h"

namespace laurent {

/*****************************************************************************

        Chapter I -- Construction and normalization.

 *****************************************************************************/

Laurent::Laurent(long c) {
  if (c != 0)
    t_.emplace_back(0, Coeff(c));
}

Laurent Laurent::monomial(Coeff c, int e) {
  Laurent p;
  if (c != 0)
    p.t_.emplace_back(e, std::move(c));
  return p;
}

Laurent Laurent::bar_pair(int e) {
  Laurent p;
  if (e == 0)
    return Laurent(2);
  if (e < 0)
    e = -e;
  p.t_.emplace_back(-e, Coeff(1));
  p.t_.emplace_back(e, Coeff(1));
  return p;
}

void Laurent::normalize() {
  t_.erase(std::remove_if(t_.begin(), t_.end(),
                          [](const auto& t) { return t.second == 0; }),
           t_.end());
}

/*****************************************************************************

        Chapter II -- Inspection.

 *****************************************************************************/

int Laurent::min_exp() const {
  if (t_.empty())
    throw std::logic_error("min_exp: zero polynomial has no degree");
  return t_.front().first;
}

int Laurent::max_exp() const {
  if (t_.empty())
    throw std::logic_error("max_exp: zero polynomial has no degree");
  return t_.back().first;
}

Coeff Laurent::coeff(int e) const {
  auto it = std::lower_bound(
      t_.begin(), t_.end(), e,
      [](const auto& t, int x) { return t.first < x; });
  if (it == t_.end() || it->first != e)
    return Coeff(0);
  return it->second;
}

/*****************************************************************************

        Chapter III -- Ring operations.

        Addition is a two-pointer merge; multiplication collects all pairwise
        products and combines them in one sort-and-fold pass, which is fast
        at the sparse sizes this library produces.

 *****************************************************************************/

Laurent& Laurent::operator+=(const Laurent& q) {
  if (q.t_.empty())
    return *this;
  if (t_.empty()) {
    t_ = q.t_;
    return *this;
  }
  std::vector<std::pair<int, Coeff>> out;
  out.reserve(t_.size() + q.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < q.t_.size()) {
    if (t_[i].first < q.t_[j].first) {
      out.push_back(std::move(t_[i++]));
    } else if (t_[i].first > q.t_[j].first) {
      out.push_back(q.t_[j++]);
    } else {
      Coeff c = std::move(t_[i].second);
      c += q.t_[j].second;
      if (c != 0)
        out.emplace_back(t_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i < t_.size(); ++i)
    out.push_back(std::move(t_[i]));
  for (; j < q.t_.size(); ++j)
    out.push_back(q.t_[j]);
  t_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& q) {
  *this += -q;
  return *this;
}

Laurent Laurent::operator+(const Laurent& q) const {
  Laurent r = *this;
  r += q;
  return r;
}

Laurent Laurent::operator-(const Laurent& q) const {
  Laurent r = *this;
  r -= q;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.t_)
    t.second = -t.second;
  return r;
}

Laurent Laurent::operator*(const Laurent& q) const {
  Laurent r;
  if (t_.empty() || q.t_.empty())
    return r;
  std::vector<std::pair<int, Coeff>> prod;
  prod.reserve(t_.size() * q.t_.size());
  for (const auto& a : t_)
    for (const auto& b : q.t_)
      prod.emplace_back(a.first + b.first, a.second * b.second);
  std::sort(prod.begin(), prod.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& t : prod) {
    if (!r.t_.empty() && r.t_.back().first == t.first)
      r.t_.back().second += t.second;
    else
      r.t_.push_back(std::move(t));
  }
  r.normalize();
  return r;
}

Laurent& Laurent::operator*=(const Laurent& q) {
  *this = *this * q;
  return *this;
}

void Laurent::add_term(int e, const Coeff& c) {
  if (c == 0)
    return;
  auto it = std::lower_bound(
      t_.begin(), t_.end(), e,
      [](const auto& t, int x) { return t.first < x; });
  if (it != t_.end() && it->first == e) {
    it->second += c;
    if (it->second == 0)
      t_.erase(it);
  } else {
    t_.emplace(it, e, c);
  }
}

void Laurent::add_scaled(const Laurent& q, const Laurent& f) {
  if (f.is_zero() || q.is_zero())
    return;
  if (f.t_.size() == 1) {
    add_scaled_monomial(q, f.t_[0].second, f.t_[0].first);
    return;
  }
  *this += q * f;
}

void Laurent::add_scaled_monomial(const Laurent& q, const Coeff& c, int e) {
  if (c == 0 || q.is_zero())
    return;
  Laurent shift;
  shift.t_.reserve(q.t_.size());
  for (const auto& t : q.t_)
    shift.t_.emplace_back(t.first + e, t.second * c);
  *this += shift;
}

Laurent Laurent::shifted(int e) const {
  Laurent r = *this;
  for (auto& t : r.t_)
    t.first += e;
  return r;
}

/*****************************************************************************

        Chapter IV -- Structure maps: bar, A_{<0}, symmetric heads.

 *****************************************************************************/

Laurent Laurent::bar() const {
  Laurent r;
  r.t_.reserve(t_.size());
  for (auto it = t_.rbegin(); it != t_.rend(); ++it)
    r.t_.emplace_back(-it->first, it->second);
  return r;
}

bool Laurent::strictly_negative() const {
  return t_.empty() || t_.back().first < 0;
}

bool Laurent::bar_symmetric() const {
  size_t i = 0, j = t_.size();
  while (i < j) {
    --j;
    if (i > j)
      break;
    if (t_[i].first != -t_[j].first || t_[i].second != t_[j].second)
      return false;
    ++i;
  }
  return true;
}

std::pair<Laurent, Laurent> Laurent::head_symmetrize() const {
  Laurent m;
  for (const auto& t : t_) {
    if (t.first > 0) {
      m.add_term(t.first, t.second);
      m.add_term(-t.first, t.second);
    } else if (t.first == 0) {
      m.add_term(0, t.second);
    }
  }
  Laurent r = *this - m;
  if (!r.strictly_negative())
    throw kl::data_error("head_symmetrize: remainder not strictly negative");
  return {std::move(m), std::move(r)};
}

std::pair<Laurent, Laurent> Laurent::symmetric_head() const {
  if (!bar_symmetric())
    throw kl::data_error("symmetric_head: input is not bar-symmetric: " +
                         str());
  return head_symmetrize();
}

/*****************************************************************************

        Chapter V -- Input / output.

 *****************************************************************************/

namespace {

// one monomial in human form, sign handled by the caller
std::string term_str(const Coeff& abs_c, int e) {
  std::string s;
  if (e == 0)
    return abs_c.str();
  if (abs_c != 1)
    s = abs_c.str() + "*";
  s += "v";
  if (e != 1) {
    s += "^";
    s += std::to_string(e);
  }
  return s;
}

} // namespace

std::string Laurent::str() const {
  if (t_.empty())
    return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    bool neg = it->second < 0;
    Coeff a = neg ? Coeff(-it->second) : it->second;
    if (it == t_.rbegin())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    s += term_str(a, it->first);
  }
  return s;
}

nlohmann::json Laurent::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (auto it = t_.rbegin(); it != t_.rend(); ++it)
    j.push_back({it->first, it->second.str()});
  return j;
}

Laurent Laurent::from_json(const nlohmann::json& j) {
  if (!j.is_array())
    throw kl::data_error("laurent: JSON form must be an array of pairs");
  Laurent p;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_string())
      throw kl::data_error("laurent: malformed term " + item.dump());
    int e = item[0].get<int>();
    Coeff c;
    try {
      c = Coeff(item[1].get<std::string>());
    } catch (const std::exception&) {
      throw kl::data_error("laurent: bad coefficient " + item.dump());
    }
    p.add_term(e, c);
  }
  return p;
}

} // namespace laurent
