#include "indisc/goedel.hpp"

#include "indisc/error.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <iterator>
#include <vector>

namespace indisc {

Natural cantor_pair(const Natural& a, const Natural& b) {
  Natural s = a + b;
  return s * (s + 1) / 2 + b;
}

namespace {

using Big = boost::multiprecision::mpz_int;

// Integer square root. cpp_int's sqrt is quadratic per bit, which makes codes of
// deeply nested formulas (millions of bits) undecodable, so large inputs go through GMP.
Natural isqrt(const Natural& n) {
  if (n == 0 || boost::multiprecision::msb(n) < 2048) return boost::multiprecision::sqrt(n);
  std::vector<std::uint64_t> limbs;
  export_bits(n, std::back_inserter(limbs), 64, false);
  Big g;
  mpz_import(g.backend().data(), limbs.size(), -1, sizeof(std::uint64_t), 0, 0, limbs.data());
  g = boost::multiprecision::sqrt(g);
  limbs.assign(mpz_sizeinbase(g.backend().data(), 2) / 64 + 1, 0);
  std::size_t count = 0;
  mpz_export(limbs.data(), &count, -1, sizeof(std::uint64_t), 0, 0, g.backend().data());
  Natural out;
  import_bits(out, limbs.begin(), limbs.begin() + static_cast<std::ptrdiff_t>(count), 64, false);
  return out;
}

}  // namespace

std::pair<Natural, Natural> cantor_unpair(const Natural& c) {
  Natural w = (isqrt(8 * c + 1) - 1) / 2;
  Natural t = w * (w + 1) / 2;
  Natural b = c - t;
  return {w - b, b};
}

namespace {

Natural fold(const std::vector<Natural>& cs) {
  if (cs.empty()) return 0;
  Natural acc = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) acc = cantor_pair(cs[i], acc);
  return acc;
}

std::vector<Natural> unfold(const Natural& c, std::size_t n) {
  std::vector<Natural> out;
  Natural rest = c;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto [a, b] = cantor_unpair(rest);
    out.push_back(std::move(a));
    rest = std::move(b);
  }
  out.push_back(std::move(rest));
  return out;
}

Natural node(CodeTag tag, const std::vector<Natural>& children) {
  return cantor_pair(static_cast<unsigned>(tag), fold(children));
}

Natural var_code(const VarId& v) { return cantor_pair(static_cast<unsigned>(v.ns), v.index); }

VarId decode_var(const Natural& c) {
  auto [ns, idx] = cantor_unpair(c);
  if (ns > 1 || idx > 0xffffffffu) throw NotACodeError("invalid variable code " + c.str());
  auto index = static_cast<std::uint32_t>(idx);
  if (ns == 1) {
    if (index == 0) throw NotACodeError("fresh variables are indexed from 1");
    return VarId::z(index);
  }
  return VarId::x(index);
}

}  // namespace

Natural goedel_encode(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return node(CodeTag::Zero, {});
    case Term::Kind::Var: return node(CodeTag::Var, {var_code(t.var())});
    case Term::Kind::Succ: return node(CodeTag::Succ, {goedel_encode(t.arg())});
    case Term::Kind::Add: return node(CodeTag::Add, {goedel_encode(t.lhs()), goedel_encode(t.rhs())});
    case Term::Kind::Mul: return node(CodeTag::Mul, {goedel_encode(t.lhs()), goedel_encode(t.rhs())});
  }
  return 0;
}

Natural goedel_encode(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: return node(CodeTag::Eq, {goedel_encode(f.lhs()), goedel_encode(f.rhs())});
    case K::Lt: return node(CodeTag::Lt, {goedel_encode(f.lhs()), goedel_encode(f.rhs())});
    case K::InI: return node(CodeTag::InI, {goedel_encode(f.term())});
    case K::Not: return node(CodeTag::Not, {goedel_encode(f.sub())});
    case K::Or: return node(CodeTag::Or, {goedel_encode(f.left()), goedel_encode(f.right())});
    case K::And: return node(CodeTag::And, {goedel_encode(f.left()), goedel_encode(f.right())});
    case K::Implies:
      return node(CodeTag::Implies, {goedel_encode(f.left()), goedel_encode(f.right())});
    case K::Exists: return node(CodeTag::Exists, {var_code(f.var()), goedel_encode(f.body())});
    case K::Forall: return node(CodeTag::Forall, {var_code(f.var()), goedel_encode(f.body())});
    case K::BddExists:
      return node(CodeTag::BddExists,
                  {var_code(f.var()), goedel_encode(f.bound()), goedel_encode(f.body())});
    case K::BddForall:
      return node(CodeTag::BddForall,
                  {var_code(f.var()), goedel_encode(f.bound()), goedel_encode(f.body())});
  }
  return 0;
}

Term goedel_decode_term(const Natural& code) {
  auto [tag, payload] = cantor_unpair(code);
  if (tag > 4) throw NotACodeError(code.str() + " is not the code of a term");
  switch (static_cast<CodeTag>(static_cast<unsigned>(tag))) {
    case CodeTag::Zero:
      if (payload != 0) throw NotACodeError(code.str() + " is not a code (zero with payload)");
      return Term::zero();
    case CodeTag::Var: return Term::var(decode_var(payload));
    case CodeTag::Succ: return Term::succ(goedel_decode_term(payload));
    case CodeTag::Add: {
      auto cs = unfold(payload, 2);
      return Term::add(goedel_decode_term(cs[0]), goedel_decode_term(cs[1]));
    }
    default: {
      auto cs = unfold(payload, 2);
      return Term::mul(goedel_decode_term(cs[0]), goedel_decode_term(cs[1]));
    }
  }
}

Formula goedel_decode(const Natural& code) {
  auto [tag, payload] = cantor_unpair(code);
  if (tag < 5 || tag > 15) throw NotACodeError(code.str() + " is not the code of a formula");
  switch (static_cast<CodeTag>(static_cast<unsigned>(tag))) {
    case CodeTag::Eq:
    case CodeTag::Lt: {
      auto cs = unfold(payload, 2);
      auto a = goedel_decode_term(cs[0]);
      auto b = goedel_decode_term(cs[1]);
      return tag == 5 ? Formula::eq(a, b) : Formula::lt(a, b);
    }
    case CodeTag::InI: return Formula::in_i(goedel_decode_term(payload));
    case CodeTag::Not: return Formula::negate(goedel_decode(payload));
    case CodeTag::Or:
    case CodeTag::And:
    case CodeTag::Implies: {
      auto cs = unfold(payload, 2);
      auto a = goedel_decode(cs[0]);
      auto b = goedel_decode(cs[1]);
      if (tag == 9) return Formula::disj(a, b);
      if (tag == 10) return Formula::conj(a, b);
      return Formula::implies(a, b);
    }
    case CodeTag::Exists:
    case CodeTag::Forall: {
      auto cs = unfold(payload, 2);
      auto v = decode_var(cs[0]);
      auto body = goedel_decode(cs[1]);
      return tag == 12 ? Formula::exists(v, body) : Formula::forall(v, body);
    }
    default: {
      auto cs = unfold(payload, 3);
      auto v = decode_var(cs[0]);
      auto bound = goedel_decode_term(cs[1]);
      if (bound.contains(v)) throw NotACodeError(code.str() + " is not a code (bound mentions its variable)");
      auto body = goedel_decode(cs[2]);
      return tag == 14 ? Formula::bdd_exists(v, bound, body) : Formula::bdd_forall(v, bound, body);
    }
  }
}

const GoedelCoding& default_coding() {
  static const CantorCoding coding;
  return coding;
}

}  // namespace indisc
