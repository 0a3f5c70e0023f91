#include "mmp132/gf.hpp"

#include <mutex>

#include "mmp132/errors.hpp"

namespace mmp132 {

namespace {

const XPoly kOne{1};

// sum_{j<m} C_j t^j
TSeries catalan_head(int m, std::size_t N) {
  return TSeries::from_t_poly(N, catalan_prefix(static_cast<std::size_t>(std::max(m, 0))));
}

// C_j t^j
TSeries catalan_term(int j, std::size_t N) {
  return TSeries::monomial(N, static_cast<std::size_t>(j), XPoly(catalan(static_cast<std::size_t>(j))));
}

TSeries t_times(const TSeries& s) { return s.shifted(1); }

void require_positive(int v, const char* what) {
  if (v < 1) throw InvalidInput(std::string(what) + " must be at least 1");
}

}  // namespace

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::Zero: return "0000";
    case Shape::K000: return "K000";
    case Shape::ZK00: return "0K00";
    case Shape::ZZK0: return "00K0";
    case Shape::ZZZK: return "000K";
    case Shape::K0L0: return "K0L0";
    case Shape::K00L: return "K00L";
    case Shape::KL00: return "KL00";
    case Shape::ZKL0: return "0KL0";
    case Shape::ZZLK: return "00LK";
    case Shape::ZK0L: return "0K0L";
  }
  return "?";
}

GfKey classify(const PatternSpec& p, std::size_t order) {
  if (p.has_empty())
    throw UnsupportedPattern("pattern " + p.to_string() + " has an EMPTY coordinate; only the oracle route applies");
  if (p.nonzero_count() > 2)
    throw UnsupportedPattern("pattern " + p.to_string() +
                             " has three or more nonzero coordinates; no generating function is implemented");
  const int a = p.a().min(), b = p.b().min(), c = p.c().min(), d = p.d().min();
  const int mask = (a > 0) << 3 | (b > 0) << 2 | (c > 0) << 1 | (d > 0);
  switch (mask) {
    case 0b0000: return {Shape::Zero, 0, 0, order};
    case 0b1000: return {Shape::K000, a, 0, order};
    case 0b0100: return {Shape::ZK00, b, 0, order};
    case 0b0010: return {Shape::ZZK0, c, 0, order};
    case 0b0001: return {Shape::ZZZK, d, 0, order};
    case 0b1010: return {Shape::K0L0, a, c, order};
    case 0b1001: return {Shape::K00L, a, d, order};
    case 0b1100: return {Shape::KL00, a, b, order};
    case 0b0110: return {Shape::ZKL0, b, c, order};
    case 0b0011: return {Shape::ZZLK, c, d, order};
    case 0b0101: return {Shape::ZK0L, b, d, order};
    default: break;
  }
  throw UnsupportedPattern("pattern " + p.to_string() + " has an unsupported shape");
}

GfKey normalize(GfKey key) {
  switch (key.shape) {
    case Shape::KL00: key.shape = Shape::K00L; break;   // (k,l,0,0) -> (k,0,0,l)
    case Shape::ZZLK: key.shape = Shape::ZKL0; std::swap(key.k, key.l); break;  // (0,0,l,k) -> (0,k,l,0)
    case Shape::ZZZK: key.shape = Shape::ZK00; break;  // (0,0,0,k) -> (0,k,0,0)
    default: break;
  }
  return key;
}

PatternSpec pattern_of(const GfKey& key) {
  const int k = key.k, l = key.l;
  switch (key.shape) {
    case Shape::Zero: return {0, 0, 0, 0};
    case Shape::K000: return {k, 0, 0, 0};
    case Shape::ZK00: return {0, k, 0, 0};
    case Shape::ZZK0: return {0, 0, k, 0};
    case Shape::ZZZK: return {0, 0, 0, k};
    case Shape::K0L0: return {k, 0, l, 0};
    case Shape::K00L: return {k, 0, 0, l};
    case Shape::KL00: return {k, l, 0, 0};
    case Shape::ZKL0: return {0, k, l, 0};
    case Shape::ZZLK: return {0, 0, k, l};
    case Shape::ZK0L: return {0, k, 0, l};
  }
  return {};
}

TSeries GfEngine::memo(const GfKey& key) {
  {
    std::shared_lock lock(mu_);
    auto it = memo_.lower_bound(key);
    if (it != memo_.end() && it->first.shape == key.shape && it->first.k == key.k && it->first.l == key.l)
      return it->first.order == key.order ? it->second : it->second.truncated(key.order);
  }
  TSeries s = build(key);
  std::unique_lock lock(mu_);
  memo_.emplace(key, s);
  return s;
}

std::size_t GfEngine::memo_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

void GfEngine::clear() {
  std::unique_lock lock(mu_);
  memo_.clear();
}

TSeries GfEngine::q0000(std::size_t N) { return memo({Shape::Zero, 0, 0, N}); }

TSeries GfEngine::qk000(int k, std::size_t N) {
  if (k == 0) return q0000(N);
  require_positive(k, "k");
  return memo({Shape::K000, k, 0, N});
}

TSeries GfEngine::q00k0(int k, std::size_t N) {
  if (k == 0) return q0000(N);
  require_positive(k, "k");
  return memo({Shape::ZZK0, k, 0, N});
}

TSeries GfEngine::q0k00(int k, std::size_t N) {
  if (k == 0) return q0000(N);
  require_positive(k, "k");
  return memo({Shape::ZK00, k, 0, N});
}

TSeries GfEngine::qk0l0(int k, int l, std::size_t N) {
  if (l == 0) return qk000(k, N);
  if (k == 0) return q00k0(l, N);
  require_positive(k, "k");
  require_positive(l, "l");
  return memo({Shape::K0L0, k, l, N});
}

TSeries GfEngine::qk00l(int k, int l, std::size_t N) {
  if (l == 0) return qk000(k, N);
  if (k == 0) return q0k00(l, N);
  require_positive(k, "k");
  require_positive(l, "l");
  return memo({Shape::K00L, k, l, N});
}

TSeries GfEngine::q0kl0(int k, int l, std::size_t N) {
  if (l == 0) return q0k00(k, N);
  if (k == 0) return q00k0(l, N);
  require_positive(k, "k");
  require_positive(l, "l");
  return memo({Shape::ZKL0, k, l, N});
}

TSeries GfEngine::q0k0l(int k, int l, std::size_t N) {
  if (l == 0) return q0k00(k, N);
  if (k == 0) return q0k00(l, N);
  require_positive(k, "k");
  require_positive(l, "l");
  return memo({Shape::ZK0L, k, l, N});
}

TSeries GfEngine::compute(const GfKey& raw) {
  const GfKey key = normalize(raw);
  const std::size_t N = key.order;
  switch (key.shape) {
    case Shape::Zero: return q0000(N);
    case Shape::K000: return qk000(key.k, N);
    case Shape::ZK00: return q0k00(key.k, N);
    case Shape::ZZK0: return q00k0(key.k, N);
    case Shape::K0L0: return qk0l0(key.k, key.l, N);
    case Shape::K00L: return qk00l(key.k, key.l, N);
    case Shape::ZKL0: return q0kl0(key.k, key.l, N);
    case Shape::ZK0L: return q0k0l(key.k, key.l, N);
    default: break;
  }
  throw UnsupportedPattern("shape " + shape_name(key.shape) + " is not computed directly");
}

TSeries GfEngine::dispatch(const PatternSpec& p, std::size_t N) { return compute(classify(p, N)); }

TSeries GfEngine::build(const GfKey& key) {
  const std::size_t N = key.order;
  const int k = key.k;
  const int l = key.l;
  const TSeries one = TSeries::one(N);
  const TSeries ctx = catalan_of_tx(N);

  switch (key.shape) {
    case Shape::Zero:
      return ctx;

    case Shape::K000:
      return reciprocal(one - t_times(qk000(k - 1, N)));

    case Shape::ZZK0: {
      const TSeries tx_minus_t = TSeries::monomial(N, 1, XPoly{-1, 1});
      const TSeries A = one + tx_minus_t * catalan_head(k, N);
      const TSeries u = TSeries::monomial(N, 1, XPoly{0, 1});
      return solve_quadratic_fixed_point(A, u);
    }

    case Shape::ZK00: {
      const TSeries inv = reciprocal(one - t_times(ctx));
      if (k == 1) return inv;
      TSeries num = one;
      for (int j = 0; j <= k - 2; ++j) num += t_times(catalan_term(j, N) * (q0k00(k - 1 - j, N) - ctx));
      return num * inv;
    }

    case Shape::K0L0:
      return reciprocal(one - t_times(qk0l0(k - 1, l, N)));

    case Shape::K00L: {
      const TSeries D = one - t_times(qk000(k - 1, N));
      TSeries num = catalan_term(l, N);
      for (int j = 0; j <= l - 1; ++j) {
        const TSeries inner = qk00l(k - 1, l - j, N);
        num += catalan_term(j, N) * (D + t_times(inner - catalan_head(l - j, N)));
      }
      return num * reciprocal(D);
    }

    case Shape::ZKL0: {
      const TSeries D = one - t_times(q00k0(l, N));
      TSeries num = catalan_term(k - 1, N);
      for (int j = 0; j <= k - 2; ++j) {
        const TSeries inner = q0kl0(k - j - 1, l, N);
        num += catalan_term(j, N) * (D + t_times(inner - catalan_head(k - j - 1, N)));
      }
      return num * reciprocal(D);
    }

    case Shape::ZK0L: {
      TSeries phi = catalan_head(k + l, N) - t_times(catalan_head(k + l - 1, N));
      for (int j = 0; j <= k - 2; ++j)
        phi += t_times(catalan_term(j, N) * (q0k0l(k - 1 - j, l, N) - catalan_head(k + l - j - 1, N)));
      phi += t_times((q0k00(k, N) - catalan_head(k - 1, N)) * (q0k00(l, N) - catalan_head(l, N)));
      for (int j = 1; j <= l - 1; ++j)
        phi += t_times(catalan_term(j, N) * (q0k0l(k, l - j, N) - catalan_head(k + l - j - 1, N)));
      return phi * reciprocal(TSeries::from_t_poly(N, IntPoly{1, -1}));
    }

    default:
      break;
  }
  throw UnsupportedPattern("shape " + shape_name(key.shape) + " is not computed directly");
}

TSeries GfEngine::qk001_reduced(int k, std::size_t N) {
  require_positive(k, "k");
  const TSeries one = TSeries::one(N);
  const TSeries P = qk000(k - 1, N);
  const TSeries D = one - t_times(P);
  return (D + t_times(qk00l(k - 1, 1, N))) * reciprocal(D);
}

TSeries GfEngine::qk002_reduced(int k, std::size_t N) {
  require_positive(k, "k");
  const TSeries one = TSeries::one(N);
  const TSeries P = qk000(k - 1, N);
  const TSeries D = one - t_times(P);
  const TSeries num = one - t_times(P) - P.shifted(2) + t_times(qk00l(k - 1, 2, N)) + qk00l(k - 1, 1, N).shifted(2);
  return num * reciprocal(D);
}

TSeries GfEngine::q0101_reduced(std::size_t N) {
  const TSeries one = TSeries::one(N);
  const TSeries num = one + t_times(q0k00(1, N) * (q0k00(1, N) - one));
  return num * reciprocal(TSeries::from_t_poly(N, IntPoly{1, -1}));
}

TSeries GfEngine::q0201_reduced(std::size_t N) {
  const TSeries one = TSeries::one(N);
  const TSeries q0200 = q0k00(2, N);
  const TSeries q0001 = q0k00(1, N);
  const TSeries num = one + t_times(q0k0l(1, 1, N) + q0200 * q0001 - q0200 - q0001);
  return num * reciprocal(TSeries::from_t_poly(N, IntPoly{1, -1}));
}

TSeries GfEngine::q0202_reduced(std::size_t N) {
  const TSeries one = TSeries::one(N);
  const TSeries q0200 = q0k00(2, N);
  const TSeries q0201 = q0k0l(2, 1, N);
  const TSeries num = one + t_times(q0201) + q0201.shifted(2) + t_times(q0200 * q0200) - q0200.shifted(1) -
                      q0200.shifted(1) - q0200.shifted(2);
  return num * reciprocal(TSeries::from_t_poly(N, IntPoly{1, -1}));
}

TSeries GfEngine::q02l0_reduced(int l, std::size_t N) {
  require_positive(l, "l");
  const TSeries one = TSeries::one(N);
  return one + t_times(q0kl0(1, l, N)) * reciprocal(one - t_times(q00k0(l, N)));
}

TSeries GfEngine::q00k0_radical(int k, std::size_t N) {
  require_positive(k, "k");
  const std::size_t M = N + 1;
  const TSeries one = TSeries::one(M);
  const TSeries A = one + TSeries::monomial(M, 1, XPoly{-1, 1}) * catalan_head(k, M);
  const TSeries disc = A * A - TSeries::monomial(M, 1, XPoly{0, 4});
  return divide_exact_monomial(A - sqrt_unit(disc), 1, 1, BigInt(2));
}

GfEngine& default_engine() {
  static GfEngine engine;
  return engine;
}

}  // namespace mmp132
