#include "fixpoint/stdlib.hpp"

#include "fixpoint/encode.hpp"
#include "fixpoint/kernel.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace fixpoint {

namespace {

// Programs are written against a frame: a fixed arity whose arguments are
// addressed by position. `let` extends the frame with computed values.
struct Frame {
  std::size_t arity;
  Prf v(std::size_t i) const { return Prf::proj(i, arity); }
  Prf k(const Nat& c) const { return Prf::constant(c, arity); }
};

using Body = std::function<Prf(const Frame&)>;

Prf app(Prf f, std::vector<Prf> args) { return Prf::compose(std::move(f), std::move(args)); }
Prf add(Prf a, Prf b) { return app(Prf::add(), {std::move(a), std::move(b)}); }
Prf mul(Prf a, Prf b) { return app(Prf::mul(), {std::move(a), std::move(b)}); }
Prf sub(Prf a, Prf b) { return app(Prf::truncsub(), {std::move(a), std::move(b)}); }
Prf dv(Prf a, Prf b) { return app(Prf::div(), {std::move(a), std::move(b)}); }
Prf md(Prf a, Prf b) { return app(Prf::mod(), {std::move(a), std::move(b)}); }
Prf sc(Prf a) { return app(Prf::succ(), {std::move(a)}); }
Prf ifz(Prf c, Prf zero, Prf nonzero) { return app(Prf::ifzero(), {std::move(c), std::move(zero), std::move(nonzero)}); }
Prf when(Prf c, Prf yes, Prf no) { return ifz(std::move(c), std::move(no), std::move(yes)); }

// a * c + d, the basic packing step.
Prf shift(Prf a, Prf c, Prf d) { return add(mul(std::move(a), std::move(c)), std::move(d)); }

Prf let(const Frame& f, std::vector<Prf> defs, const Body& body) {
  Frame g{f.arity + defs.size()};
  std::vector<Prf> args;
  for (std::size_t i = 0; i < f.arity; ++i) args.push_back(f.v(i));
  for (Prf& d : defs) args.push_back(std::move(d));
  return app(body(g), std::move(args));
}

// step^count(init), where the step sees the frame plus the running value at
// index f.arity. The resulting recursion ignores its counter.
Prf iterate(const Frame& f, Prf init, Prf count, const Body& step) {
  const std::size_t n = f.arity;
  Prf s = step(Frame{n + 1});
  Frame h{n + 2};
  std::vector<Prf> sargs;
  for (std::size_t i = 0; i < n; ++i) sargs.push_back(h.v(i));
  sargs.push_back(h.v(n + 1));
  Prf rec = Prf::primrec(std::move(init), app(std::move(s), std::move(sargs)));
  std::vector<Prf> args;
  for (std::size_t i = 0; i < n; ++i) args.push_back(f.v(i));
  args.push_back(std::move(count));
  return app(std::move(rec), std::move(args));
}

// Shared boolean helpers, each a standalone program so that composite
// expressions mention their operands once.
const Prf& eq_prog() {
  static const Prf p = [] {
    Frame f{2};
    return ifz(add(sub(f.v(0), f.v(1)), sub(f.v(1), f.v(0))), f.k(1), f.k(0));
  }();
  return p;
}
const Prf& lt_prog() {
  static const Prf p = [] {
    Frame f{2};
    return ifz(sub(f.v(1), f.v(0)), f.k(0), f.k(1));
  }();
  return p;
}
Prf eqb(Prf a, Prf b) { return app(eq_prog(), {std::move(a), std::move(b)}); }
Prf ltb(Prf a, Prf b) { return app(lt_prog(), {std::move(a), std::move(b)}); }

constexpr long kChunkEven = ((12L * 32 + 10) * 32 + 10) * 32 + 9;         // * S S 0
constexpr long kChunkOdd = (((10L * 32 + 12) * 32 + 10) * 32 + 10) * 32 + 9;  // S * S S 0
constexpr long kCodeOne = 10L * 32 + 9;                                      // S 0

Prf make_pow32() {
  Frame f{1};
  return iterate(f, f.k(1), f.v(0), [](const Frame& g) { return mul(g.v(1), g.k(32)); });
}

Prf make_pow32_above() {
  Frame f{1};
  return iterate(f, f.k(1), f.v(0), [](const Frame& g) {
    return ifz(dv(g.v(0), g.v(1)), g.v(1), mul(g.v(1), g.k(32)));
  });
}

// State p * (x + 1) + len.
Prf make_digit_length() {
  Frame f{1};
  return let(f, {sc(f.v(0))}, [](const Frame& g) {
    Prf s = iterate(g, g.v(1), g.v(0), [](const Frame& h) {
      return let(h, {dv(h.v(2), h.v(1))}, [](const Frame& q) {
        return ifz(dv(q.v(0), q.v(3)), q.v(2),
                   shift(mul(q.v(3), q.k(32)), q.v(1), sc(md(q.v(2), q.v(1)))));
      });
    });
    return md(s, g.v(1));
  });
}

Prf make_digit_at(const Prf& pow32) {
  Frame f{2};
  return md(dv(f.v(0), app(pow32, {f.v(1)})), f.k(32));
}

Prf make_concat(const Prf& pow32_above) {
  Frame f{2};
  return shift(f.v(0), app(pow32_above, {f.v(1)}), f.v(1));
}

// Reads m from the least significant bit. State code * (m + 2) + r where
// r = 0 means done and otherwise r - 1 is the part of m still to emit.
Prf make_numeral_code() {
  Frame f{1};
  return let(f, {add(f.v(0), f.k(2))}, [](const Frame& g) {
    Prf s = iterate(g, sc(g.v(0)), sc(g.v(0)), [](const Frame& h) {
      return let(h, {md(h.v(2), h.v(1)), dv(h.v(2), h.v(1))}, [](const Frame& u) {
        // m0 w1 s2 r3 code4
        return ifz(u.v(3), u.v(2), let(u, {sub(u.v(3), u.k(1))}, [](const Frame& q) {
          Prf w = q.v(1), code = q.v(4), rest = sc(dv(q.v(5), q.k(2)));
          return ifz(q.v(5), mul(shift(code, q.k(32), q.k(9)), w),
                     ifz(sub(q.v(5), q.k(1)), mul(shift(code, q.k(1024), q.k(kCodeOne)), w),
                         ifz(md(q.v(5), q.k(2)),
                             shift(shift(code, q.k(Nat(1) << 20), q.k(kChunkEven)), w, rest),
                             shift(shift(code, q.k(Nat(1) << 25), q.k(kChunkOdd)), w, rest))));
        }));
      });
    });
    return dv(s, g.v(1));
  });
}

Prf make_pop_markers() {
  Frame f{1};
  return iterate(f, f.v(0), f.v(0), [](const Frame& g) {
    return when(ltb(g.k(2), md(g.v(1), g.k(16))), dv(g.v(1), g.k(16)), g.v(1));
  });
}

Prf make_find_group() {
  Frame f{3};
  return iterate(f, f.v(0), f.v(0), [](const Frame& g) {
    return when(eqb(md(g.v(3), g.v(2)), g.v(1)), g.v(3), dv(g.v(3), g.k(16)));
  });
}

Prf make_mul_via_primrec() {
  Frame h{3};
  return Prf::primrec(Prf::constant(0, 1), add(h.v(2), h.v(0)));
}

Prf make_factorial() {
  Frame h{2};
  return Prf::primrec(Prf::constant(1, 0), mul(sc(h.v(0)), h.v(1)));
}

#define FIXPOINT_CACHED(name, expr) \
  const Prf& name() {               \
    static const Prf p = expr;      \
    return p;                       \
  }
FIXPOINT_CACHED(pow32, make_pow32())
FIXPOINT_CACHED(pow32_above, make_pow32_above())
FIXPOINT_CACHED(digit_length, make_digit_length())
FIXPOINT_CACHED(digit_at, make_digit_at(pow32()))
FIXPOINT_CACHED(concat, make_concat(pow32_above()))
FIXPOINT_CACHED(numeral_code, make_numeral_code())
FIXPOINT_CACHED(pop_markers, make_pop_markers())
FIXPOINT_CACHED(find_group, make_find_group())

// The scan runs over the parameters below, computed once from (c, m).
constexpr std::size_t kC = 0, kM = 1, kK = 2, kNC = 3, kMS = 4, kNP = 5;

// Scan state, least significant first:
//   flags  wf + 2 fm1 + 4 kind      (mod 16)
//   p      power of 32 at the next token (mod K = 32 (c + 1))
//   vstr   pending index digits, base 16 (mod MS = K^3)
//   vpow   16^(number of pending digits) (mod MS)
//   stack  base-16 stack of open slots and scope groups (mod MS)
//   out    code written so far
// wf: still well-formed. fm1: no free variable other than x0 seen.
// kind: 0 nothing pending, 1 variable marker without digits, 2 quantifier,
// 3 variable with digits. Stack digits: 1 term slot, 2 formula slot, and a
// binder scope is the group 3, index digits shifted by 3, 14.
struct Fields {
  std::size_t state, p, vstr, vpow, stack, out, wf, fm1, kind;
};
using FieldBody = std::function<Prf(const Frame&, const Fields&)>;

Prf pack(const Frame& g, Prf flags, Prf p, Prf vstr, Prf vpow, Prf stack, Prf out) {
  Prf ms = g.v(kMS);
  Prf packed = shift(shift(shift(out, ms, std::move(stack)), ms, std::move(vpow)), ms, std::move(vstr));
  return shift(shift(std::move(packed), g.v(kK), std::move(p)), g.k(16), std::move(flags));
}

Prf unpack(const Frame& g, std::size_t s, const FieldBody& body) {
  const std::size_t b = g.arity;
  auto split = [](const Frame& f, std::size_t x, Prf m) { return std::vector<Prf>{md(f.v(x), m), dv(f.v(x), m)}; };
  return let(g, split(g, s, g.k(16)), [&](const Frame& g1) {
    return let(g1, split(g1, b + 1, g1.v(kK)), [&](const Frame& g2) {
      return let(g2, split(g2, b + 3, g2.v(kMS)), [&](const Frame& g3) {
        return let(g3, split(g3, b + 5, g3.v(kMS)), [&](const Frame& g4) {
          return let(g4, split(g4, b + 7, g4.v(kMS)), [&](const Frame& g5) {
            Prf fl = g5.v(b);
            return let(g5, {md(fl, g5.k(2)), md(dv(fl, g5.k(2)), g5.k(2)), dv(fl, g5.k(4))}, [&](const Frame& g6) {
              return body(g6, Fields{s, b + 2, b + 4, b + 6, b + 8, b + 9, b + 10, b + 11, b + 12});
            });
          });
        });
      });
    });
  });
}

using ResolvedBody = std::function<Prf(const Frame&, std::size_t out, std::size_t fm1, std::size_t stack)>;

// Settles a pending variable or quantifier, then drops scope groups that are
// now exposed on top of the stack.
Prf resolve(const Frame& g, const Fields& x, const ResolvedBody& body) {
  const std::size_t b = g.arity;
  Prf pattern = shift(shift(g.k(3), g.v(x.vpow), g.v(x.vstr)), g.k(16), g.k(14));
  Prf window = mul(g.v(x.vpow), g.k(256));
  Prf found = ifz(md(g.v(x.kind), g.k(2)), g.k(0), app(find_group(), {g.v(x.stack), pattern, window}));
  return let(g, {found}, [&](const Frame& h) {
    Prf f = h.v(b), out = h.v(x.out), kind = h.v(x.kind), stack = h.v(x.stack);
    Prf out_a = when(eqb(kind, h.k(1)), ifz(f, shift(out, h.v(kNP), h.v(kNC)), shift(out, h.k(32), h.k(13))), out);
    Prf fm1_a = when(eqb(kind, h.k(3)), ifz(f, h.k(0), h.v(x.fm1)), h.v(x.fm1));
    Prf opened = shift(shift(shift(shift(stack, h.k(16), h.k(3)), h.v(x.vpow), h.v(x.vstr)), h.k(16), h.k(14)),
                       h.k(16), h.k(2));
    Prf stack_a = app(pop_markers(), {when(eqb(kind, h.k(2)), opened, stack)});
    return let(h, {out_a, fm1_a, stack_a}, [&](const Frame& q) { return body(q, b + 1, b + 2, b + 3); });
  });
}

Prf within(const Frame& z, const Prf& t, long lo, long hi) {
  return mul(ltb(z.k(lo - 1), t), ltb(t, z.k(hi + 1)));
}

// Consumes the non-digit token t against the top stack slot.
Prf take_token(const Frame& r, const Fields& x, std::size_t t, std::size_t p2, std::size_t out_a,
               std::size_t fm1_a, std::size_t stack_a) {
  const std::size_t b = r.arity;
  Prf tok = r.v(t);
  Prf sort = when(within(r, tok, 1, 8), r.k(2), when(within(r, tok, 9, 13), r.k(1), r.k(0)));
  return let(r, {md(r.v(stack_a), r.k(16)), dv(r.v(stack_a), r.k(16)), sort}, [&](const Frame& z) {
    Prf T = z.v(t), st = z.v(b + 1), srt = z.v(b + 2);
    auto is = [&](long v) { return eqb(T, z.k(v)); };
    Prf valid = mul(ltb(z.k(0), srt), eqb(z.v(b), srt));
    Prf stack_c =
        when(add(is(1), add(is(11), is(12))), shift(st, z.k(256), z.k(17)),
             when(within(z, T, 3, 6), shift(st, z.k(256), z.k(34)),
                  when(is(2), shift(st, z.k(16), z.k(2)), when(is(10), shift(st, z.k(16), z.k(1)), st))));
    Prf out_c = when(is(13), z.v(out_a), shift(z.v(out_a), z.k(32), T));
    Prf kind_c = when(is(13), z.k(1), when(within(z, T, 7, 8), z.k(2), z.k(0)));
    Prf flags = add(z.k(1), add(mul(z.k(2), z.v(fm1_a)), mul(z.k(4), kind_c)));
    return when(valid, pack(z, flags, z.v(p2), z.k(0), z.k(1), stack_c, out_c), sub(z.v(x.state), z.k(1)));
  });
}

Prf scan_step(const Frame& g) {
  return unpack(g, g.arity - 1, [](const Frame& u, const Fields& x) {
    const std::size_t t = u.arity, p2 = u.arity + 1;
    Prf next = let(u, {md(dv(u.v(kC), u.v(x.p)), u.k(32)), dv(u.v(x.p), u.k(32))}, [&](const Frame& w) {
      Prf T = w.v(t), kind = w.v(x.kind);
      Prf kind_is1 = eqb(kind, w.k(1));
      Prf flags = add(w.k(1), add(mul(w.k(2), w.v(x.fm1)), mul(w.k(4), when(kind_is1, w.k(3), kind))));
      Prf out = shift(when(kind_is1, shift(w.v(x.out), w.k(32), w.k(13)), w.v(x.out)), w.k(32), T);
      Prf digit = ifz(kind, sub(w.v(x.state), w.k(1)),
                      pack(w, flags, w.v(p2), shift(w.v(x.vstr), w.k(16), sub(T, w.k(10))),
                           mul(w.v(x.vpow), w.k(16)), w.v(x.stack), out));
      Prf other = resolve(w, x, [&](const Frame& r, std::size_t o, std::size_t f, std::size_t s) {
        return take_token(r, x, t, p2, o, f, s);
      });
      return ifz(within(w, T, 14, 23), other, digit);
    });
    Prf s = u.v(x.state);
    return ifz(u.v(x.wf), s, ifz(u.v(x.p), s, next));
  });
}

// Result out * 4 + fm1 * 2 + wf.
Prf make_scan() {
  Frame f{2};
  return let(f, {mul(f.k(32), sc(f.v(kC))), app(numeral_code(), {f.v(kM)})}, [](const Frame& g) {
    Prf k = g.v(kK);
    return let(g, {mul(mul(k, k), k), app(pow32_above(), {g.v(kNC)})}, [](const Frame& h) {
      Prf init = pack(h, h.k(3), dv(app(pow32_above(), {h.v(kC)}), h.k(32)), h.k(0), h.k(1), h.k(2), h.k(0));
      Prf state = iterate(h, init, h.v(kC), scan_step);
      return let(h, {state}, [](const Frame& e) {
        return unpack(e, e.arity - 1, [](const Frame& u, const Fields& x) {
          return resolve(u, x, [&](const Frame& r, std::size_t out, std::size_t fm1, std::size_t stack) {
            Prf wf = mul(r.v(x.wf), mul(eqb(r.v(stack), r.k(0)), eqb(r.v(x.p), r.k(0))));
            return shift(r.v(out), r.k(4), shift(r.v(fm1), r.k(2), wf));
          });
        });
      });
    });
  });
}
FIXPOINT_CACHED(scan, make_scan())

Prf make_subst_code() {
  Frame f{2};
  return let(f, {app(scan(), {f.v(0), f.v(1)})}, [](const Frame& g) {
    return when(md(g.v(2), g.k(2)), dv(g.v(2), g.k(4)), g.k(0));
  });
}

Prf make_in_n_code() {
  Frame f{1};
  return eqb(md(app(scan(), {f.v(0), f.k(0)}), f.k(4)), f.k(3));
}

Prf make_diag() {
  Frame f{1};
  return let(f, {app(scan(), {f.v(0), f.v(0)})}, [](const Frame& g) {
    return when(eqb(md(g.v(1), g.k(4)), g.k(3)), dv(g.v(1), g.k(4)), g.k(0));
  });
}
#undef FIXPOINT_CACHED

}  // namespace

const std::vector<StdlibEntry>& stdlib() {
  static const std::vector<StdlibEntry> lib = {
      {"eq", eq_prog(), "1 if x = y else 0"},
      {"lt", lt_prog(), "1 if x < y else 0"},
      {"pow32", pow32(), "32^i"},
      {"pow32_above", pow32_above(), "least power of 32 greater than x"},
      {"digit_length", digit_length(), "number of base-32 digits of x"},
      {"digit_at", digit_at(), "base-32 digit i of x, counted from the least significant"},
      {"concat", concat(), "code of the token string of a followed by that of b"},
      {"numeral_code", numeral_code(), "code of the token string of numeral(m)"},
      {"pop_markers", pop_markers(), "drops scope-group digits from the top of a scan stack"},
      {"find_group", find_group(), "suffix of a scan stack ending in the given group, or 0"},
      {"subst_code", make_subst_code(), "code of decode(c) with numeral(m) for free x0, or 0"},
      {"in_n_code", make_in_n_code(), "1 if c codes a formula with at most x0 free"},
      {"diag", make_diag(), "subst_code(n, n) when in_n_code(n), else 0"},
      {"mul_via_primrec", make_mul_via_primrec(), "x * k by repeated addition"},
      {"factorial", make_factorial(), "k!"},
  };
  return lib;
}

const Prf& stdlib_program(std::string_view name) {
  for (const StdlibEntry& e : stdlib())
    if (e.name == name) return e.program;
  throw std::out_of_range("unknown library program: " + std::string(name));
}

}  // namespace fixpoint

namespace fixpoint::native {

Nat pow32_above(const Nat& x) {
  Nat p = 1;
  while (p <= x) p *= 32;
  return p;
}

Nat digit_length(const Nat& x) { return x == 0 ? Nat(0) : Nat(static_cast<unsigned long>(digits_of(x).size())); }

Nat digit_at(const Nat& x, const Nat& i) {
  if (!fits_u64(i)) return 0;
  Nat shifted = x >> static_cast<mp_bitcnt_t>(5 * to_u64(i));
  return shifted & 31;
}

Nat concat(const Nat& a, const Nat& b) { return a * pow32_above(b) + b; }

Nat numeral_code(const Nat& m) { return numeral_fragment_code(m); }

Nat pop_markers(const Nat& stack) {
  Nat s = stack;
  while (s % 16 >= 3) s /= 16;
  return s;
}

Nat find_group(const Nat& stack, const Nat& pattern, const Nat& window) {
  Nat r = stack;
  while (r != 0 && mod_total(r, window) != pattern) r /= 16;
  return r;
}

Nat subst_code(const Nat& c, const Nat& m) {
  auto f = decode(c);
  if (!f) return 0;
  return encode(subst_closed(*f, 0, numeral(m).term)).value();
}

Nat in_n_code(const Nat& c) { return in_n(c) ? 1 : 0; }

Nat diag(const Nat& n) {
  auto f = decode(n);
  if (!f || !in_fm(*f, 1)) return 0;
  return encode(subst_closed(*f, 0, numeral(n).term)).value();
}

Nat mul_via_primrec(const Nat& x, const Nat& k) { return x * k; }

Nat factorial(const Nat& k) {
  Nat r = 1;
  for (Nat i = 2; i <= k; ++i) r *= i;
  return r;
}

Nat call(std::string_view name, std::span<const Nat> a) {
  const std::size_t arity = stdlib_program(name).arity();
  if (a.size() != arity) throw ArityError("native " + std::string(name) + ": wrong number of arguments");
  if (name == "eq") return a[0] == a[1] ? 1 : 0;
  if (name == "lt") return a[0] < a[1] ? 1 : 0;
  if (name == "pow32") return fits_u64(a[0]) ? Nat(Nat(1) << static_cast<mp_bitcnt_t>(5 * to_u64(a[0]))) : Nat(0);
  if (name == "pow32_above") return pow32_above(a[0]);
  if (name == "digit_length") return digit_length(a[0]);
  if (name == "digit_at") return digit_at(a[0], a[1]);
  if (name == "concat") return concat(a[0], a[1]);
  if (name == "numeral_code") return numeral_code(a[0]);
  if (name == "pop_markers") return pop_markers(a[0]);
  if (name == "find_group") return find_group(a[0], a[1], a[2]);
  if (name == "subst_code") return subst_code(a[0], a[1]);
  if (name == "in_n_code") return in_n_code(a[0]);
  if (name == "diag") return diag(a[0]);
  if (name == "mul_via_primrec") return mul_via_primrec(a[0], a[1]);
  if (name == "factorial") return factorial(a[0]);
  throw std::out_of_range("no native counterpart for " + std::string(name));
}

}  // namespace fixpoint::native
