#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "starq/multivector.hpp"

namespace starq {

// theta_i -| u by structural recursion over the antiderivation rules:
// theta_i -| theta_j = B(i,j), theta_i -| (u v) = (theta_i -| u) v + (-1)^{pi(u)} u (theta_i -| v).
template <class R>
Multivector<R> contract_generator(int i, const Multivector<R>& u, const BilinearForm<R>& B) {
  Multivector<R> out(u.dim());
  for (const auto& [mask, v] : u.terms()) {
    // Peel the first generator j of the monomial: theta_i -| (theta_j rest)
    // = B(i,j) rest - theta_j (theta_i -| rest), iterated.
    std::uint32_t rest = mask;
    int sign = 1;
    while (rest) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      const R& bij = B(i, j);
      if (!scalar_traits<R>::is_zero(bij)) {
        R coeff = v * bij;
        out.add_term(rest | (mask & ((1u << j) - 1u)), sign > 0 ? std::move(coeff) : -std::move(coeff));
      }
      sign = -sign;
    }
  }
  out.prune();
  return out;
}

// x -|_B u extended by (uv) -| w = u -| (v -| w): peel x's generators from the left.
template <class R>
Multivector<R> contract_rules(const Multivector<R>& x, const Multivector<R>& u,
                              const BilinearForm<R>& B) {
  if (x.dim() != u.dim()) throw std::invalid_argument("dimension mismatch");
  Multivector<R> out(u.dim());
  for (const auto& [xmask, xc] : x.terms()) {
    // theta_{i1}...theta_{ir} -| u = theta_{i1} -| (theta_{i2}...theta_{ir} -| u)
    std::vector<int> idx;
    std::uint32_t mm = xmask;
    while (mm) {
      idx.push_back(std::countr_zero(mm));
      mm &= mm - 1;
    }
    Multivector<R> acc = u;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) acc = contract_generator(*it, acc, B);
    out += xc * acc;
  }
  out.prune();
  return out;
}

namespace detail {

// One application of the bidifferential kernel sum_{ij} B_ij <-d_i ->d_j to a
// list of (left mask, right mask) pairs. Left side takes right derivatives,
// right side takes left derivatives.
template <class R>
std::map<std::pair<std::uint32_t, std::uint32_t>, R> kernel_step(
    const std::map<std::pair<std::uint32_t, std::uint32_t>, R>& state, const BilinearForm<R>& B) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, R> next;
  for (const auto& [pair, c] : state) {
    const auto [s, t] = pair;
    std::uint32_t ss = s;
    while (ss) {
      const int i = std::countr_zero(ss);
      ss &= ss - 1;
      std::uint32_t tt = t;
      while (tt) {
        const int j = std::countr_zero(tt);
        tt &= tt - 1;
        const R& bij = B(i, j);
        if (scalar_traits<R>::is_zero(bij)) continue;
        const int sign = right_deriv_sign(s, i) * left_deriv_sign(t, j);
        R add = c * bij;
        auto key = std::make_pair(s & ~(1u << i), t & ~(1u << j));
        auto it = next.find(key);
        if (it == next.end()) {
          next.emplace(key, sign > 0 ? std::move(add) : -std::move(add));
        } else {
          it->second += sign > 0 ? std::move(add) : -std::move(add);
          if (scalar_traits<R>::is_zero(it->second)) next.erase(it);
        }
      }
    }
  }
  return next;
}

}  // namespace detail

// Circle product u o_B v = u exp(sum_ij B(theta_i,theta_j) <-d_i ->d_j) v.
// The series terminates after min(pi(u), pi(v)) contractions.
template <class R>
Multivector<R> circle_product(const Multivector<R>& u, const Multivector<R>& v,
                              const BilinearForm<R>& B) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  using Traits = scalar_traits<R>;
  if (u.dim() == 0)
    return Multivector<R>::scalar(0, u.scalar_part() * v.scalar_part());
  Multivector<R> out(u.dim());
  std::map<std::pair<std::uint32_t, std::uint32_t>, R> state;
  for (const auto& [ma, va] : u.terms())
    for (const auto& [mb, vb] : v.terms()) {
      auto key = std::make_pair(ma, mb);
      auto it = state.find(key);
      if (it == state.end())
        state.emplace(key, va * vb);
      else
        it->second += va * vb;
    }
  long factorial = 1;
  for (int k = 0; !state.empty(); ++k) {
    if (k > 0) factorial *= k;
    const R inv_fact = Traits::from_rational(1, factorial);
    for (const auto& [pair, c] : state) {
      const auto [s, t] = pair;
      if (s & t) continue;
      const int sign = detail::wedge_sign(s, t);
      R add = c * inv_fact;
      out.add_term(s | t, sign > 0 ? std::move(add) : -std::move(add));
    }
    state = detail::kernel_step(state, B);
  }
  out.prune();
  return out;
}

// Closed-form contraction: for homogeneous u of grade r,
// u -|_B v = (1/r!) u (sum B <-d ->d)^r v; extended per homogeneous component.
template <class R>
Multivector<R> contract_closed(const Multivector<R>& u, const Multivector<R>& v,
                               const BilinearForm<R>& B) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  using Traits = scalar_traits<R>;
  Multivector<R> out(u.dim());
  for (int r = 0; r <= u.dim(); ++r) {
    Multivector<R> ur = u.grade_part(r);
    if (ur.is_zero()) continue;
    std::map<std::pair<std::uint32_t, std::uint32_t>, R> state;
    for (const auto& [ma, va] : ur.terms())
      for (const auto& [mb, vb] : v.terms()) state[{ma, mb}] = va * vb;
    long factorial = 1;
    for (int k = 1; k <= r; ++k) {
      factorial *= k;
      state = detail::kernel_step(state, B);
    }
    const R inv_fact = Traits::from_rational(1, factorial);
    for (const auto& [pair, c] : state) {
      const auto [s, t] = pair;
      if (s != 0u) continue;  // all of u's generators are consumed after r steps
      out.add_term(t, c * inv_fact);
    }
  }
  out.prune();
  return out;
}

// Clifford map gamma_v u = v o_B u; gamma_{theta_i} u = theta_i u + theta_i -|_B u.
template <class R>
Multivector<R> clifford_map(const Multivector<R>& v, const Multivector<R>& u,
                            const BilinearForm<R>& B) {
  return circle_product(v, u, B);
}

template <class R>
Multivector<R> circle_commutator(const Multivector<R>& a, const Multivector<R>& b,
                                 const BilinearForm<R>& B) {
  return circle_product(a, b, B) - circle_product(b, a, B);
}

template <class R>
Multivector<R> circle_anticommutator(const Multivector<R>& a, const Multivector<R>& b,
                                     const BilinearForm<R>& B) {
  return circle_product(a, b, B) + circle_product(b, a, B);
}

// n-fold circle power.
template <class R>
Multivector<R> circle_power(const Multivector<R>& a, int n, const BilinearForm<R>& B) {
  Multivector<R> out = Multivector<R>::unit(a.dim());
  for (int k = 0; k < n; ++k) out = circle_product(out, a, B);
  return out;
}

}  // namespace starq
