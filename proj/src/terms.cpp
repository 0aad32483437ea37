#include "dqw/terms.hpp"

#include <sstream>

#include "dqw/error.hpp"

namespace dqw {

void check_layout(const term_layout& layout) {
  if (layout.n < 1 || layout.n > kMaxDimension) {
    throw config_error("dimension " + std::to_string(layout.n) + " outside supported range 1.." +
                       std::to_string(kMaxDimension));
  }
  if (layout.arity < 0 || layout.arity > kMaxArity) {
    throw config_error("cochain arity " + std::to_string(layout.arity) + " exceeds " +
                       std::to_string(kMaxArity));
  }
}

namespace terms {
namespace {

void bump(monomial_key& key, int slot, int by) {
  int v = key[slot] + by;
  if (v < 0 || v > 255) throw config_error("exponent overflow in term key");
  key[slot] = static_cast<std::uint8_t>(v);
}

const gaussian& half_i() {
  static const gaussian h{rational(0), rational(1, 2)};
  return h;
}

// (i/2)^m (-1)^b / (a! b!) with m = a + b.
gaussian moyal_factor(int a, int b) {
  gaussian f = 1;
  for (int i = 0; i < a + b; ++i) f *= half_i();
  if (b % 2 == 1) f = -f;
  return f / gaussian(factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b)));
}

int max_p(const term_layout& l, const term_list& ts, int k) {
  int m = 0;
  for (const auto& t : ts) m = std::max(m, static_cast<int>(t.key[l.p(k)]));
  return m;
}

struct cup_context {
  const term_layout& la;
  const term_layout& lb;
  term_map& out;
};

void cup_recurse(const cup_context& ctx, const term_list& a, const term_list& b, int k, int r,
                 const gaussian& factor) {
  if (a.empty() || b.empty()) return;
  if (k == ctx.la.n) {
    for (const auto& ta : a) {
      for (const auto& tb : b) {
        monomial_key key = tensor_key(ctx.la, ta.key, ctx.lb, tb.key);
        bump(key, 0, r);
        add(ctx.out, key, factor * ta.coef * tb.coef);
      }
    }
    return;
  }
  const int alpha_max = max_p(ctx.lb, b, k);
  const int beta_max = max_p(ctx.la, a, k);
  term_list a_alpha = a;
  term_list b_alpha = b;
  for (int alpha = 0; alpha <= alpha_max && !a_alpha.empty() && !b_alpha.empty(); ++alpha) {
    term_list a_ab = a_alpha;
    term_list b_ab = b_alpha;
    for (int beta = 0; beta <= beta_max && !a_ab.empty() && !b_ab.empty(); ++beta) {
      cup_recurse(ctx, a_ab, b_ab, k + 1, r + alpha + beta, factor * moyal_factor(alpha, beta));
      a_ab = dp(ctx.la, a_ab, k);
      b_ab = dq(ctx.lb, b_ab, k);
    }
    a_alpha = dq(ctx.la, a_alpha, k);
    b_alpha = dp(ctx.lb, b_alpha, k);
  }
}

}  // namespace

void add(term_map& dst, const monomial_key& key, const gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = dst.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

void add_scaled(term_map& dst, const term_map& src, const gaussian& s) {
  if (s.is_zero()) return;
  for (const auto& [k, c] : src) add(dst, k, c * s);
}

term_map scaled(const term_map& src, const gaussian& s) {
  term_map out;
  add_scaled(out, src, s);
  return out;
}

term_map negated(const term_map& src) {
  term_map out;
  for (const auto& [k, c] : src) out.emplace_hint(out.end(), k, -c);
  return out;
}

term_map sum(const term_map& a, const term_map& b) {
  term_map out = a;
  add_scaled(out, b, 1);
  return out;
}

term_map difference(const term_map& a, const term_map& b) {
  term_map out = a;
  add_scaled(out, b, -1);
  return out;
}

int lambda_power(const monomial_key& key) { return key[0]; }

int p_degree(const term_layout& l, const monomial_key& key) {
  int s = 0;
  for (int k = 0; k < l.n; ++k) s += key[l.p(k)];
  return s;
}

int q_degree(const term_layout& l, const monomial_key& key) {
  int s = 0;
  for (int k = 0; k < l.n; ++k) s += key[l.q(k)];
  return s;
}

int deg(const term_layout& l, const monomial_key& key) { return key[0] + p_degree(l, key); }

int derivative_order(const term_layout& l, const monomial_key& key, int slot) {
  int s = 0;
  for (int k = 0; k < l.n; ++k) s += key[l.d(slot, k)];
  return s;
}

int derivative_order(const term_layout& l, const monomial_key& key) {
  int s = 0;
  for (int slot = 0; slot < l.arity; ++slot) s += derivative_order(l, key, slot);
  return s;
}

term_map truncated(const term_layout& l, const term_map& src, int max_deg) {
  term_map out;
  for (const auto& [k, c] : src) {
    if (deg(l, k) <= max_deg) out.emplace_hint(out.end(), k, c);
  }
  return out;
}

term_map deg_component(const term_layout& l, const term_map& src, int degree) {
  term_map out;
  for (const auto& [k, c] : src) {
    if (deg(l, k) == degree) out.emplace_hint(out.end(), k, c);
  }
  return out;
}

term_map conjugated(const term_map& src) {
  term_map out;
  for (const auto& [k, c] : src) out.emplace_hint(out.end(), k, c.conj());
  return out;
}

term_list dq(const term_layout& l, const term_list& src, int k) {
  term_list out;
  for (const auto& t : src) {
    const int e = t.key[l.q(k)];
    if (e > 0) {
      monomial_key key = t.key;
      bump(key, l.q(k), -1);
      out.push_back({key, t.coef * gaussian(e)});
    }
    for (int slot = 0; slot < l.arity; ++slot) {
      monomial_key key = t.key;
      bump(key, l.d(slot, k), 1);
      out.push_back({key, t.coef});
    }
  }
  return out;
}

term_list dp(const term_layout& l, const term_list& src, int k) {
  term_list out;
  for (const auto& t : src) {
    const int e = t.key[l.p(k)];
    if (e == 0) continue;
    monomial_key key = t.key;
    bump(key, l.p(k), -1);
    out.push_back({key, t.coef * gaussian(e)});
  }
  return out;
}

term_map dq(const term_layout& l, const term_map& src, int k) {
  term_map out;
  for (const auto& [key0, c] : src) {
    const int e = key0[l.q(k)];
    if (e > 0) {
      monomial_key key = key0;
      bump(key, l.q(k), -1);
      add(out, key, c * gaussian(e));
    }
    for (int slot = 0; slot < l.arity; ++slot) {
      monomial_key key = key0;
      bump(key, l.d(slot, k), 1);
      add(out, key, c);
    }
  }
  return out;
}

term_map dp(const term_layout& l, const term_map& src, int k) {
  term_map out;
  for (const auto& [key0, c] : src) {
    const int e = key0[l.p(k)];
    if (e == 0) continue;
    monomial_key key = key0;
    bump(key, l.p(k), -1);
    add(out, key, c * gaussian(e));
  }
  return out;
}

term_map dq_multi(const term_layout& l, const term_map& src, const monomial_key& multi, int offset) {
  term_map cur = src;
  for (int k = 0; k < l.n; ++k) {
    for (int m = 0; m < multi[offset + k] && !cur.empty(); ++m) cur = dq(l, cur, k);
  }
  return cur;
}

monomial_key tensor_key(const term_layout& la, const monomial_key& a, const term_layout& lb,
                        const monomial_key& b) {
  const term_layout lo{la.n, la.arity + lb.arity};
  monomial_key out;
  out[0] = a[0];
  bump(out, 0, b[0]);
  for (int k = 0; k < la.n; ++k) {
    out[lo.p(k)] = a[la.p(k)];
    bump(out, lo.p(k), b[lb.p(k)]);
    out[lo.q(k)] = a[la.q(k)];
    bump(out, lo.q(k), b[lb.q(k)]);
  }
  for (int s = 0; s < la.arity; ++s) {
    for (int k = 0; k < la.n; ++k) out[lo.d(s, k)] = a[la.d(s, k)];
  }
  for (int s = 0; s < lb.arity; ++s) {
    for (int k = 0; k < la.n; ++k) out[lo.d(la.arity + s, k)] = b[lb.d(s, k)];
  }
  return out;
}

term_map tensor(const term_layout& la, const term_map& a, const term_layout& lb, const term_map& b,
                int max_deg) {
  term_map out;
  for (const auto& [ka, ca] : a) {
    const int da = deg(la, ka);
    for (const auto& [kb, cb] : b) {
      if (da + deg(lb, kb) > max_deg) continue;
      add(out, tensor_key(la, ka, lb, kb), ca * cb);
    }
  }
  return out;
}

term_map weyl_cup(const term_layout& la, const term_map& a, const term_layout& lb, const term_map& b,
                  int max_deg) {
  if (la.n != lb.n) throw config_error("dimension mismatch in Weyl product");
  term_map out;
  cup_context ctx{la, lb, out};
  for (const auto& [ka, ca] : a) {
    const int da = deg(la, ka);
    for (const auto& [kb, cb] : b) {
      if (da + deg(lb, kb) > max_deg) continue;
      cup_recurse(ctx, term_list{{ka, ca}}, term_list{{kb, cb}}, 0, 0, 1);
    }
  }
  return out;
}

term_map substitute(const term_layout& lphi, const term_map& phi, int slot, const term_layout& lchi,
                    const term_map& chi) {
  if (lphi.n != lchi.n) throw config_error("dimension mismatch in cochain substitution");
  if (slot < 0 || slot >= lphi.arity) throw config_error("substitution slot out of range");
  const term_layout lo{lphi.n, lphi.arity - 1 + lchi.arity};
  std::map<monomial_key, term_map> cache;
  term_map out;
  for (const auto& [kphi, cphi] : phi) {
    monomial_key multi;
    for (int k = 0; k < lphi.n; ++k) multi[k] = kphi[lphi.d(slot, k)];
    auto it = cache.find(multi);
    if (it == cache.end()) it = cache.emplace(multi, dq_multi(lchi, chi, multi, 0)).first;
    for (const auto& [kchi, cchi] : it->second) {
      monomial_key key;
      key[0] = kphi[0];
      bump(key, 0, kchi[0]);
      for (int k = 0; k < lphi.n; ++k) {
        key[lo.p(k)] = kphi[lphi.p(k)];
        bump(key, lo.p(k), kchi[lchi.p(k)]);
        key[lo.q(k)] = kphi[lphi.q(k)];
        bump(key, lo.q(k), kchi[lchi.q(k)]);
      }
      int out_slot = 0;
      for (int s = 0; s < lphi.arity; ++s) {
        if (s == slot) {
          for (int t = 0; t < lchi.arity; ++t, ++out_slot) {
            for (int k = 0; k < lphi.n; ++k) key[lo.d(out_slot, k)] = kchi[lchi.d(t, k)];
          }
        } else {
          for (int k = 0; k < lphi.n; ++k) key[lo.d(out_slot, k)] = kphi[lphi.d(s, k)];
          ++out_slot;
        }
      }
      add(out, key, cphi * cchi);
    }
  }
  return out;
}

std::string describe(const term_layout& l, const monomial_key& key, const gaussian& c) {
  std::ostringstream os;
  os << '(' << to_string(c) << ')';
  auto power = [&os](const char* name, int index, int e) {
    if (e == 0) return;
    os << ' ' << name;
    if (index >= 0) os << index + 1;
    if (e > 1) os << '^' << e;
  };
  power("lambda", -1, key[0]);
  for (int k = 0; k < l.n; ++k) power("p", k, key[l.p(k)]);
  for (int k = 0; k < l.n; ++k) power("q", k, key[l.q(k)]);
  for (int s = 0; s < l.arity; ++s) {
    os << " d[";
    for (int k = 0; k < l.n; ++k) os << (k ? "," : "") << static_cast<int>(key[l.d(s, k)]);
    os << ']';
  }
  return os.str();
}

}  // namespace terms
}  // namespace dqw
