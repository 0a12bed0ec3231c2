#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvq/aut.hpp"
#include "mvq/coloring.hpp"
#include "mvq/constructions.hpp"
#include "mvq/table.hpp"

namespace mvqtest {

using namespace mvq;

// Q4: the Alexander quandle on Z2[t^{+-1}]/(t^2+t+1), elements 0,1,t,t^-1.
inline MultiplicationTable q4() {
  return alexander_quandle(QuotientRing(2, {1, 1, 1}));
}

// theta = (1,t,t^-1) on the carrier {0,1,t,t^-1} = {0,1,2,3}.
inline Permutation theta() { return Permutation::from_cycles(4, {{1, 2, 3}}); }

inline MultiplicationTable cq52() { return connected_quandle_fixture(5, 2); }

// omega = (2,4,5,3) in the catalog's 1-based labels = (1,3,4,2) on carriers.
inline Permutation omega() { return Permutation::from_cycles(5, {{1, 3, 4, 2}}); }

inline OperatorQuandle make_oq(const MultiplicationTable& q,
                               std::map<std::string, Permutation> ops) {
  OperatorQuandle oq;
  oq.quandle = q;
  oq.operators = std::move(ops);
  return oq;
}

// Closure-condition oracles transcribed from the appendix figures: for each
// small knot, the set of seed colors satisfying the printed condition has the
// same cardinality as the coloring count. mul/div are the quandle operations,
// al/be the operators bound to the two types.
struct ConditionOracle {
  MultiplicationTable q;
  MultiplicationTable d;
  Permutation al, be;

  ConditionOracle(const MultiplicationTable& quandle, const Permutation& alpha,
                  const Permutation& beta)
      : q(quandle), d(division_table(quandle)), al(alpha), be(beta) {}

  int mul(int x, int y) const { return q.at(x, y); }
  int div(int x, int y) const { return d.at(x, y); }
  int a1(int x) const { return al(x); }      // alpha
  int a_(int x) const { return al.inverse()(x); }  // alpha^{-1}
  int b1(int x) const { return be(x); }
  int b_(int x) const { return be.inverse()(x); }

  long count_2_1() const {
    long n = 0;
    for (int a = 0; a < q.n; ++a)
      if (div(div(a, a1(a)), a_(a)) == a) ++n;
    return n;
  }
  long count_3_1() const {
    // y*z = a with y = alpha^{-1}(a)/a, z = (a/alpha(a))/alpha^{-1}beta^{-1}(a)
    long n = 0;
    for (int a = 0; a < q.n; ++a) {
      int y = div(a_(a), a);
      int z = div(div(a, a1(a)), a_(b_(a)));
      if (mul(y, z) == a) ++n;
    }
    return n;
  }
  long count_3_2() const {
    // x/(alpha(a)/a) = a with x = (a/alpha^{-1}(a))*a
    long n = 0;
    for (int a = 0; a < q.n; ++a) {
      int x = mul(div(a, a_(a)), a);
      if (div(x, div(a1(a), a)) == a) ++n;
    }
    return n;
  }
  long count_3_3() const {
    // z/alpha^{-1}beta^{-1}(a) = a with z = (a/alpha(a))/alpha(a)
    long n = 0;
    for (int a = 0; a < q.n; ++a) {
      int z = div(div(a, a1(a)), a1(a));
      if (div(z, a_(b_(a))) == a) ++n;
    }
    return n;
  }
  long count_3_4() const {
    // y*beta^{-1}alpha^{-1}(a) = a with y = (a/alpha^{-1}(a))/alpha^{-1}(a)
    long n = 0;
    for (int a = 0; a < q.n; ++a) {
      int y = div(div(a, a_(a)), a_(a));
      if (mul(y, b_(a_(a))) == a) ++n;
    }
    return n;
  }
  long count_3_5() const {
    // ((a/alpha beta(a))/alpha beta^{-1}(a))/alpha^{-1}beta^{-1}(a) = a
    long n = 0;
    for (int a = 0; a < q.n; ++a)
      if (div(div(div(a, a1(b1(a))), a1(b_(a))), a_(b_(a))) == a) ++n;
    return n;
  }
  long count_3_6() const {
    // (b/a)/b = a and a/(b/a) = b
    long n = 0;
    for (int a = 0; a < q.n; ++a)
      for (int b = 0; b < q.n; ++b)
        if (div(div(b, a), b) == a && div(a, div(b, a)) == b) ++n;
    return n;
  }
  long count_3_7() const {
    // x/b = a and beta alpha(a)/x = b with x = beta^{-1}(alpha^{-1}(b)*alpha(a))
    long n = 0;
    for (int a = 0; a < q.n; ++a)
      for (int b = 0; b < q.n; ++b) {
        int x = b_(mul(a_(b), a1(a)));
        if (div(x, b) == a && div(b1(a1(a)), x) == b) ++n;
      }
    return n;
  }
  long count_k(int nn) const {
    // a * beta^n alpha^{-n}(a) = a
    long cnt = 0;
    for (int a = 0; a < q.n; ++a) {
      int v = a;
      for (int i = 0; i < nn; ++i) v = a_(v);
      for (int i = 0; i < nn; ++i) v = b1(v);
      if (mul(a, v) == a) ++cnt;
    }
    return cnt;
  }
  long count_special_pair() const {
    // alpha beta(a)/alpha beta^{-2}(b) = a and alpha^{-1}beta^{-1}(b)*alpha(a) = b
    long n = 0;
    for (int a = 0; a < q.n; ++a)
      for (int b = 0; b < q.n; ++b)
        if (div(a1(b1(a)), a1(b_(b_(b)))) == a && mul(a_(b_(b)), a1(a)) == b) ++n;
    return n;
  }
};

}  // namespace mvqtest
