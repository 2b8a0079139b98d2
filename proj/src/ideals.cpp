#include "skewstone/ideals.hpp"

#include <algorithm>
#include <string>

namespace skewstone {

  bool Ideal::contains(Elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }

  namespace {
    std::vector<bool> membership(Elem n, std::vector<Elem> const& members) {
      std::vector<bool> in(n, false);
      for (Elem x : members) {
        if (x >= n) {
          throw StructuralError("subset member " + std::to_string(x) + " is out of range");
        }
        in[x] = true;
      }
      return in;
    }

    std::vector<Elem> members_of(std::vector<bool> const& in) {
      std::vector<Elem> out;
      for (Elem x = 0; x < in.size(); ++x) {
        if (in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    // Closes `in` under ∨ in place.
    void join_close(SkewAlgebra const& A, std::vector<bool>& in) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (Elem x = 0; x < A.size(); ++x) {
          if (!in[x]) {
            continue;
          }
          for (Elem y = 0; y < A.size(); ++y) {
            if (in[y] && !in[A.join(x, y)]) {
              in[A.join(x, y)] = true;
              changed          = true;
            }
          }
        }
      }
    }
  }  // namespace

  std::optional<std::vector<Elem>> ideal_violation(SkewAlgebra const&       A,
                                                   std::vector<Elem> const& members) {
    std::vector<bool> in = membership(A.size(), members);
    if (!in[A.zero()]) {
      return std::vector<Elem>{A.zero()};
    }
    for (Elem x = 0; x < A.size(); ++x) {
      if (!in[x]) {
        continue;
      }
      for (Elem y = 0; y < A.size(); ++y) {
        if (!in[y] && natural_preceq(A, y, x)) {
          return std::vector<Elem>{x, y};
        }
        if (in[y] && !in[A.join(x, y)]) {
          return std::vector<Elem>{x, y};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<Elem>> prime_violation(SkewAlgebra const& A, Ideal const& I) {
    if (I.members.size() == A.size()) {
      return std::vector<Elem>{};
    }
    std::vector<bool> in = membership(A.size(), I.members);
    for (Elem a = 0; a < A.size(); ++a) {
      for (Elem b = 0; b < A.size(); ++b) {
        if (in[A.meet(a, b)] && !in[a] && !in[b]) {
          return std::vector<Elem>{a, b};
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Ideal> enumerate_ideals(SkewAlgebra const& A) {
    GreenRelations const g = green_partitions(A);
    Quotient const       q = quotient_by(A, g.D);
    std::vector<Ideal>   out;
    for (Elem d = 0; d < q.algebra.size(); ++d) {
      Ideal I;
      for (Elem a = 0; a < A.size(); ++a) {
        if (natural_leq(q.algebra, q.map[a], d)) {
          I.members.push_back(a);
        }
      }
      out.push_back(std::move(I));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<PrimeIdeal> enumerate_prime_ideals(SkewAlgebra const& A) {
    GreenRelations const g = green_partitions(A);
    Quotient const       q = quotient_by(A, g.D);
    SkewAlgebra const&   Q = q.algebra;
    std::vector<Ideal>   primes;
    for (Elem t = 0; t < Q.size(); ++t) {
      if (t == Q.zero()) {
        continue;
      }
      bool atom = true;
      for (Elem u = 0; u < Q.size() && atom; ++u) {
        atom = u == Q.zero() || u == t || !natural_leq(Q, u, t);
      }
      if (!atom) {
        continue;
      }
      Ideal P;
      for (Elem a = 0; a < A.size(); ++a) {
        if (!natural_leq(Q, t, q.map[a])) {
          P.members.push_back(a);
        }
      }
      primes.push_back(std::move(P));
    }
    std::sort(primes.begin(), primes.end());

    std::vector<PrimeIdeal> out;
    for (Ideal& P : primes) {
      if (auto w = ideal_violation(A, P.members)) {
        throw DomainError("prime candidate is not an ideal", *w);
      }
      if (auto w = prime_violation(A, P)) {
        throw DomainError("prime candidate is not prime", *w);
      }
      // The characteristic map of the complement is a {0, ∧, ∨}-map to 2.
      auto chi = [&P](Elem a) { return !P.contains(a); };
      for (Elem a = 0; a < A.size(); ++a) {
        for (Elem b = 0; b < A.size(); ++b) {
          if (chi(A.meet(a, b)) != (chi(a) && chi(b))
              || chi(A.join(a, b)) != (chi(a) || chi(b))) {
            throw DomainError("prime candidate has no characteristic map", {a, b});
          }
        }
      }
      out.push_back({std::move(P), out.size()});
    }
    return out;
  }

  Partition theta_congruence(SkewAlgebra const& A, Ideal const& I) {
    if (auto w = ideal_violation(A, I.members)) {
      throw DomainError("not an ideal", *w);
    }
    std::vector<bool> in = membership(A.size(), I.members);
    Partition         theta = partition_from_relation(
        A.size(),
        [&](Elem x, Elem y) {
          Elem c = A.cap(x, y);
          return in[A.join(A.diff(x, c), A.diff(y, c))];
        },
        "theta");
    if (auto v = congruence_violation(A, theta, OpSet::all)) {
      throw DomainError("theta is not a congruence for " + std::string(op_name(v->op)),
                        {v->x, v->x_prime, v->y});
    }
    for (Elem x = 0; x < A.size(); ++x) {
      if (theta.same(x, A.zero()) != in[x]) {
        throw DomainError("zero class of theta differs from the ideal", {x});
      }
    }
    return theta;
  }

  std::vector<std::size_t> prime_reflection_bijection(SkewAlgebra const& A) {
    GreenRelations const    g      = green_partitions(A);
    Quotient const          q      = quotient_by(A, g.D);
    std::vector<PrimeIdeal> primes = enumerate_prime_ideals(A);
    std::vector<PrimeIdeal> qprimes = enumerate_prime_ideals(q.algebra);
    std::vector<std::size_t> out;
    std::vector<bool>        hit(qprimes.size(), false);
    for (PrimeIdeal const& P : primes) {
      Ideal image;
      for (Elem a : P.ideal.members) {
        image.members.push_back(q.map[a]);
      }
      std::sort(image.members.begin(), image.members.end());
      image.members.erase(std::unique(image.members.begin(), image.members.end()),
                          image.members.end());
      auto it = std::find_if(qprimes.begin(), qprimes.end(), [&](PrimeIdeal const& Q) {
        return Q.ideal == image;
      });
      if (it == qprimes.end() || hit[it->index]) {
        throw DomainError("prime reflection is not a bijection");
      }
      hit[it->index] = true;
      out.push_back(it->index);
    }
    if (out.size() != qprimes.size()) {
      throw DomainError("prime reflection is not onto");
    }
    return out;
  }

  Elem cut_across_witness(SkewAlgebra const& A, Elem a, Elem b) {
    Elem aba = A.meet(A.meet(a, b), a);
    return A.join(A.join(aba, b), aba);
  }

  Spectrum skew_spectrum(SkewAlgebra const& A) {
    Spectrum sk;
    for (PrimeIdeal& P : enumerate_prime_ideals(A)) {
      sk.primes.push_back(std::move(P.ideal));
    }
    std::vector<Elem> p;
    for (Elem i = 0; i < sk.primes.size(); ++i) {
      Partition theta = theta_congruence(A, sk.primes[i]);
      std::vector<Elem> point_of(A.size(), kUndefined);
      for (auto const& block : theta.blocks()) {
        if (sk.primes[i].contains(block.front())) {
          continue;
        }
        Elem x = static_cast<Elem>(sk.points.size());
        sk.points.push_back({i, block.front()});
        p.push_back(i);
        for (Elem a : block) {
          point_of[a] = x;
        }
      }
      sk.thetas.push_back(std::move(theta));
      sk.point_of.push_back(std::move(point_of));
    }
    std::size_t const E = p.size();
    std::vector<Elem> band(E * E, kUndefined);
    for (Elem x = 0; x < E; ++x) {
      for (Elem y = 0; y < E; ++y) {
        if (p[x] == p[y]) {
          Elem v = sk.point_of[p[x]][A.meet(sk.points[x].rep, sk.points[y].rep)];
          if (v == kUndefined) {
            throw DomainError("meet of points falls into the prime", {x, y});
          }
          band[std::size_t(x) * E + y] = v;
        }
      }
    }
    sk.space = SkewSpace(static_cast<Elem>(sk.primes.size()), std::move(p), std::move(band));
    return sk;
  }

  Mask basic_copen(Spectrum const& sk, Elem a) {
    require_mask_space(sk.space);
    Mask out = 0;
    for (auto const& row : sk.point_of) {
      if (row[a] != kUndefined) {
        out |= bit(row[a]);
      }
    }
    return out;
  }

  Mask basic_base_copen(Spectrum const& sk, Elem a) {
    require_mask_space(sk.space);
    Mask out = 0;
    for (Elem i = 0; i < sk.primes.size(); ++i) {
      if (!sk.primes[i].contains(a)) {
        out |= bit(i);
      }
    }
    return out;
  }

  bool is_leq_ideal(SkewAlgebra const& A, std::vector<Elem> const& S) {
    std::vector<bool> in = membership(A.size(), S);
    if (!in[A.zero()]) {
      return false;
    }
    for (Elem x = 0; x < A.size(); ++x) {
      if (!in[x]) {
        continue;
      }
      for (Elem y = 0; y < A.size(); ++y) {
        if ((!in[y] && natural_leq(A, y, x)) || (in[y] && !in[A.join(x, y)])) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Elem> leq_ideal_generated(SkewAlgebra const& A, std::vector<Elem> const& S) {
    std::vector<bool> seed = membership(A.size(), S);
    std::vector<bool> in(A.size(), false);
    in[A.zero()] = true;
    for (Elem y = 0; y < A.size(); ++y) {
      for (Elem x = 0; x < A.size() && !in[y]; ++x) {
        in[y] = seed[x] && natural_leq(A, y, x);
      }
    }
    join_close(A, in);
    std::vector<Elem> out = members_of(in);
    if (!is_leq_ideal(A, out)) {
      throw DomainError("join closure of a down-set is not a <=-ideal");
    }
    return out;
  }

  Ideal preceq_ideal_generated(SkewAlgebra const& A, std::vector<Elem> const& S) {
    std::vector<bool> seed = membership(A.size(), S);
    std::vector<bool> in(A.size(), false);
    in[A.zero()] = true;
    for (Elem y = 0; y < A.size(); ++y) {
      for (Elem x = 0; x < A.size() && !in[y]; ++x) {
        in[y] = seed[x] && natural_preceq(A, y, x);
      }
    }
    join_close(A, in);
    Ideal I{members_of(in)};
    if (auto w = ideal_violation(A, I.members)) {
      throw DomainError("join closure of a down-set is not an ideal", *w);
    }
    return I;
  }

  bool is_leq_cofinal(SkewAlgebra const& A, std::vector<Elem> const& S) {
    return leq_ideal_generated(A, S).size() == A.size();
  }

  bool is_preceq_cofinal(SkewAlgebra const& A, std::vector<Elem> const& S) {
    return preceq_ideal_generated(A, S).members.size() == A.size();
  }

}  // namespace skewstone
