"""Groebner bases via Buchberger's algorithm, with elimination, dimension,
and localization helpers.

Engine internals: monomials are encoded as single integers whose slot
layout realizes the active monomial order, so comparison is native integer
comparison; divisibility is tested on a companion plain packing with a
two-operation guard-bit trick.  Two order families are provided: pure
lexicographic orders (the public interface) and internal block orders that
are degree-graded inside each block.  A block order with the eliminated
variables in the leading block yields the same elimination ideal as a pure
lex order but with far smaller intermediate bases, which is what makes the
curve projections in this package tractable.

Pair management uses the standard update procedure with the coprime and
chain pruning criteria; pairs are selected by phantom-homogeneous degree
(sugar) first.  Reduction walks the working tail through a lazy max-heap so
each step costs proportional to the reducer's support, not the tail size.

Over a prime field the basis is computed directly with monic arithmetic.
Over the rationals the reduced basis is computed by a multi-modular method:
bases modulo a fixed descending sequence of 62-bit primes are combined by
Chinese remaindering and rational reconstruction, and a candidate is
accepted only after it reproduces the independently computed basis modulo a
fresh prime (and, when small enough, passes an exact check over the
rationals that all S-polynomials and generators reduce to zero).  The
reduced Groebner basis is uniquely determined by the ideal and the order,
so the modular route returns the same object a direct rational computation
would.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction

from .fields import QQ, PrimeField, is_probable_prime
from .polynomials import (
    LexOrder,
    Polynomial,
    PolynomialRing,
    extend_ring,
    fresh_variable_name,
    lift_polynomial,
    monomial_add,
    monomial_divides,
    monomial_lcm,
    monomial_sub,
)


@dataclass(frozen=True)
class Ideal:
    """A finite generating set in a polynomial ring; zero generators dropped."""

    ring: PolynomialRing
    generators: tuple

    def __init__(self, ring: PolynomialRing, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("generators must be polynomials")
            if g.ring != ring:
                raise ValueError("generator outside the ideal's ring")
            if not g.is_zero():
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced basis, sorted by ascending leading monomial."""

    ring: PolynomialRing
    order: LexOrder
    elements: tuple

    def contains_one(self) -> bool:
        return any(e.is_constant() and not e.is_zero() for e in self.elements)

    def leading_monomials(self):
        return tuple(e.leading_monomial(self.order) for e in self.elements)


# ---------------------------------------------------------------------------
# packed monomials
#
# plain packing: 16 bits per variable, most significant slot first; the top
# bit of each slot is a guard used by the divisibility test, so exponents
# stay below 2**15.  Key packing realizes the monomial order: integer
# comparison of keys must equal the order comparison, and keys must be
# affine-linear in the exponents so the engine can move monomials around
# with plain integer additions of key differences.


_SLOT_BITS = 16
_SLOT_MASK = 0xFFFF
_MAX_EXPONENT = 0x7FFF
_COMPLEMENT = 0x8000

_GUARD_CACHE = {}


def _guard_mask(n: int) -> int:
    mask = _GUARD_CACHE.get(n)
    if mask is None:
        mask = 0
        for k in range(n):
            mask |= 0x8000 << (_SLOT_BITS * k)
        _GUARD_CACHE[n] = mask
    return mask


def _pdivides(a: int, b: int, guard: int) -> bool:
    """Slot-wise a <= b on plain packings: monomial a divides monomial b."""
    return ((b | guard) - a) & guard == guard


def _plcm(a: int, b: int, n: int) -> int:
    out = 0
    for k in range(n):
        shift = _SLOT_BITS * k
        x = (a >> shift) & _SLOT_MASK
        y = (b >> shift) & _SLOT_MASK
        out |= (x if x >= y else y) << shift
    return out


def _pdegree(m: int) -> int:
    total = 0
    while m:
        total += m & _SLOT_MASK
        m >>= _SLOT_BITS
    return total


class _LexCodec:
    """Pure lex order given by a permutation (biggest variable first)."""

    def __init__(self, permutation):
        self.permutation = tuple(permutation)
        self.nvars = len(self.permutation)
        self.guard = _guard_mask(self.nvars)
        self.one_key = 0

    def pack(self, exps) -> int:
        packed = 0
        for i in self.permutation:
            e = exps[i]
            if e > _MAX_EXPONENT:
                raise OverflowError("exponent %d exceeds the engine limit" % e)
            packed = (packed << _SLOT_BITS) | e
        return packed

    def unpack(self, key: int):
        exps = [0] * self.nvars
        for i in reversed(self.permutation):
            exps[i] = key & _SLOT_MASK
            key >>= _SLOT_BITS
        return tuple(exps)

    @staticmethod
    def plain(key: int) -> int:
        return key

    @staticmethod
    def key_from_plain(plain: int) -> int:
        return plain

    @staticmethod
    def degree(key: int) -> int:
        return _pdegree(key)


class _BlockCodec:
    """Two-block order, degree-graded and reverse-lex inside each block.

    Any monomial touching the leading block beats every monomial supported
    on the trailing block alone, so basis elements supported on the trailing
    block form a basis of the elimination ideal, exactly as with lex.
    """

    def __init__(self, leading, trailing):
        self.leading = tuple(leading)
        self.trailing = tuple(trailing)
        self.sequence = self.leading + self.trailing
        self.nvars = len(self.sequence)
        if len(set(self.sequence)) != self.nvars:
            raise ValueError("blocks must partition the variables")
        self.guard = _guard_mask(self.nvars)
        self.one_key = self.pack((0,) * self.nvars)

    def _pack_block(self, exps, block, packed):
        degree = 0
        for i in block:
            e = exps[i]
            if e > _MAX_EXPONENT:
                raise OverflowError("exponent %d exceeds the engine limit" % e)
            degree += e
        packed = (packed << _SLOT_BITS) | degree
        for i in reversed(block[1:]):
            packed = (packed << _SLOT_BITS) | (_COMPLEMENT - exps[i])
        return packed

    def pack(self, exps) -> int:
        packed = 0
        if self.leading:
            packed = self._pack_block(exps, self.leading, packed)
        if self.trailing:
            packed = self._pack_block(exps, self.trailing, packed)
        return packed

    def _unpack_block(self, slots, block, exps):
        # slots follow pack order: degree first, then complements of the
        # block's last variable down to its second variable
        degree = slots[0]
        rest = 0
        for pos, i in enumerate(reversed(block[1:])):
            e = _COMPLEMENT - slots[1 + pos]
            exps[i] = e
            rest += e
        exps[block[0]] = degree - rest

    def unpack(self, key: int):
        nslots = self.nvars
        slots = [0] * nslots
        for k in range(nslots - 1, -1, -1):
            slots[k] = key & _SLOT_MASK
            key >>= _SLOT_BITS
        exps = [0] * self.nvars
        pos = 0
        for block in (self.leading, self.trailing):
            if not block:
                continue
            width = len(block)
            self._unpack_block(slots[pos : pos + width], block, exps)
            pos += width
        return tuple(exps)

    def plain(self, key: int) -> int:
        exps = self.unpack(key)
        packed = 0
        for i in self.sequence:
            packed = (packed << _SLOT_BITS) | exps[i]
        return packed

    def key_from_plain(self, plain: int) -> int:
        exps = [0] * self.nvars
        for i in reversed(self.sequence):
            exps[i] = plain & _SLOT_MASK
            plain >>= _SLOT_BITS
        return self.pack(exps)

    def degree(self, key: int) -> int:
        top = (self.nvars - 1) * _SLOT_BITS
        total = (key >> top) & _SLOT_MASK
        if self.leading and self.trailing:
            pos = (self.nvars - 1 - len(self.leading)) * _SLOT_BITS
            total += (key >> pos) & _SLOT_MASK
        return total


def _to_engine(p: Polynomial, codec):
    """Key-packed coefficient dict; rational input is scaled to primitive
    integers, prime-field input keeps its residues."""
    field = p.ring.field
    pack = codec.pack
    if field == QQ:
        denom_lcm = 1
        for c in p.terms.values():
            denom_lcm = denom_lcm * c.denominator // math.gcd(
                denom_lcm, c.denominator
            )
        out = {pack(m): int(c * denom_lcm) for m, c in p.terms.items()}
        g = 0
        for v in out.values():
            g = math.gcd(g, v)
            if g == 1:
                return out
        return {m: v // g for m, v in out.items()} if g > 1 else out
    out = {}
    for m, c in p.terms.items():
        if c.residue:
            out[pack(m)] = c.residue
    return out


def _from_engine(terms, codec, ring: PolynomialRing) -> Polynomial:
    field = ring.field
    return Polynomial(
        ring, {codec.unpack(m): field(v) for m, v in terms.items()}
    )


# ---------------------------------------------------------------------------
# coefficient engines on key-packed dicts


class _IntegerArith:
    """Fraction-free arithmetic on primitive integer coefficient dicts.

    Used for exact verification over the rationals; the heavy basis search
    over the rationals goes through the modular engine.
    """

    def __init__(self, codec):
        self.codec = codec

    @staticmethod
    def normalize(terms):
        if not terms:
            return terms
        g = 0
        for v in terms.values():
            g = math.gcd(g, v)
            if g == 1:
                break
        if terms[max(terms)] < 0:
            g = -g
        if g == 1:
            return terms
        return {m: v // g for m, v in terms.items()}

    def reducer_entry(self, terms):
        """Reducer record with a cheapness key (term count, coefficient size)."""
        lt = max(terms)
        lc = terms[lt]
        return (
            lt,
            self.codec.plain(lt),
            lc,
            terms,
            (len(terms), abs(lc).bit_length()),
        )

    def spoly(self, f, g):
        """S-polynomial of term dicts, integer-scaled to avoid fractions."""
        codec = self.codec
        ltf, ltg = max(f), max(g)
        gamma = math.gcd(f[ltf], g[ltg])
        cf = g[ltg] // gamma
        cg = f[ltf] // gamma
        big = codec.key_from_plain(
            _plcm(codec.plain(ltf), codec.plain(ltg), codec.nvars)
        )
        df = big - ltf
        dg = big - ltg
        out = {}
        for m, c in f.items():
            out[m + df] = c * cf
        for m, c in g.items():
            k = m + dg
            v = out.get(k, 0) - c * cg
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return out

    def reduce(self, target, reducers):
        """Full normal form up to a nonzero rational factor, primitive output.

        The working tail is kept content-free and a running rational
        multiplier keeps emitted head terms exact, so reduction chains never
        accumulate spurious integer factors.
        """
        codec = self.codec
        guard = codec.guard
        plain = codec.plain
        work = dict(target)
        result = {}
        multiplier = Fraction(1)
        while work:
            g = 0
            for v in work.values():
                g = math.gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                for k in work:
                    work[k] //= g
                multiplier /= g
            m = max(work)
            c = work[m]
            pm = plain(m)
            hit = None
            for red in reducers:
                if _pdivides(red[1], pm, guard):
                    hit = red
                    break
            if hit is None:
                del work[m]
                result[m] = c / multiplier
                continue
            lt, _, lc, terms, _ = hit
            shift = m - lt
            gamma = math.gcd(c, lc)
            scale = lc // gamma
            factor = c // gamma
            if scale != 1:
                if scale < 0:
                    scale = -scale
                    factor = -factor
                for k in work:
                    work[k] *= scale
                multiplier *= scale
            for mg, cg in terms.items():
                k = mg + shift
                v = work.get(k, 0) - factor * cg
                if v:
                    work[k] = v
                elif k in work:
                    del work[k]
        return self.normalize_fractions(result)

    @staticmethod
    def normalize_fractions(result):
        if not result:
            return result
        denom = 1
        for v in result.values():
            d = v.denominator
            denom = denom * d // math.gcd(denom, d)
        return _IntegerArith.normalize(
            {m: int(v * denom) for m, v in result.items()}
        )


class _ModularArith:
    """Monic-normalizing arithmetic modulo a prime."""

    def __init__(self, p: int, codec):
        self.p = p
        self.codec = codec

    def normalize(self, terms):
        if not terms:
            return terms
        p = self.p
        lc = terms[max(terms)]
        if lc == 1:
            return terms
        inv = pow(lc, p - 2, p)
        return {m: v * inv % p for m, v in terms.items()}

    def reducer_entry(self, terms):
        """Reducer record; the inverse leading coefficient is cached."""
        lt = max(terms)
        inv = pow(terms[lt], self.p - 2, self.p)
        return (lt, self.codec.plain(lt), inv, terms, (len(terms), 0))

    def spoly(self, f, g):
        p = self.p
        codec = self.codec
        ltf, ltg = max(f), max(g)
        big = codec.key_from_plain(
            _plcm(codec.plain(ltf), codec.plain(ltg), codec.nvars)
        )
        df = big - ltf
        dg = big - ltg
        factor = f[ltf] * pow(g[ltg], p - 2, p) % p
        out = {}
        for m, c in f.items():
            out[m + df] = c
        for m, c in g.items():
            k = m + dg
            v = (out.get(k, 0) - factor * c) % p
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return out

    def reduce(self, target, reducers):
        """Full normal form; the tail is walked through a lazy max-heap."""
        p = self.p
        codec = self.codec
        guard = codec.guard
        plain = codec.plain
        coeff = dict(target)
        heap = [-m for m in coeff]
        heapq.heapify(heap)
        push = heapq.heappush
        pop = heapq.heappop
        result = {}
        while heap:
            m = -heap[0]
            c = coeff.get(m)
            if not c:
                pop(heap)
                continue
            pm = plain(m)
            hit = None
            for red in reducers:
                if _pdivides(red[1], pm, guard):
                    hit = red
                    break
            if hit is None:
                pop(heap)
                result[m] = c
                del coeff[m]
                continue
            lt, _, lc_inv, terms, _ = hit
            shift = m - lt
            factor = c * lc_inv % p
            for mg, cg in terms.items():
                k = mg + shift
                old = coeff.get(k)
                v = ((old or 0) - factor * cg) % p
                if v:
                    coeff[k] = v
                    if not old:
                        push(heap, -k)
                elif old:
                    del coeff[k]
        return self.normalize(result)


# ---------------------------------------------------------------------------
# public field-exact operations (tuple monomials, no engine involvement)


def s_polynomial(p: Polynomial, q: Polynomial, order: LexOrder) -> Polynomial:
    """The classical S-polynomial, with exact coefficient division."""
    if p.ring != q.ring:
        raise ValueError("polynomials live in different rings")
    if p.is_zero() or q.is_zero():
        raise ValueError("S-polynomial requires nonzero inputs")
    ltp, cp = p.leading_term(order)
    ltq, cq = q.leading_term(order)
    big = monomial_lcm(ltp, ltq)
    mp = monomial_sub(big, ltp)
    mq = monomial_sub(big, ltq)
    one = p.ring.field.one
    inv_cp = one / cp
    inv_cq = one / cq
    out = {}
    for m, c in p.terms.items():
        out[monomial_add(m, mp)] = c * inv_cp
    for m, c in q.terms.items():
        k = monomial_add(m, mq)
        v = out.get(k, p.ring.field.zero) - c * inv_cq
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return Polynomial(p.ring, out)


def normal_form(p: Polynomial, basis, order: LexOrder) -> Polynomial:
    """Remainder of p under multivariate division by `basis`.

    The difference p - normal_form(p) lies in the ideal generated by the
    basis, and no remainder term is divisible by any basis leading monomial.
    """
    ring = p.ring
    reducers = []
    for b in basis:
        if b.ring != ring:
            raise ValueError("basis element outside p's ring")
        if not b.is_zero():
            lt, lc = b.leading_term(order)
            reducers.append((lt, lc, b.terms))
    key = order.key
    work = dict(p.terms)
    result = {}
    zero = ring.field.zero
    while work:
        m = max(work, key=key)
        c = work[m]
        hit = None
        for lt, lc, terms in reducers:
            if monomial_divides(lt, m):
                hit = (lt, lc, terms)
                break
        if hit is None:
            del work[m]
            result[m] = c
            continue
        lt, lc, terms = hit
        factor = c / lc
        shiftm = monomial_sub(m, lt)
        for mg, cg in terms.items():
            k = monomial_add(mg, shiftm)
            v = work.get(k, zero) - factor * cg
            if v:
                work[k] = v
            elif k in work:
                del work[k]
    return Polynomial(ring, result)


# ---------------------------------------------------------------------------
# core basis search (shared by the modular and exact engines)


class _UnitIdeal(Exception):
    """Internal signal: a constant appeared, the basis is {1}."""


def _core_buchberger(gens, engine):
    """Reduced basis of key-packed generators; raises _UnitIdeal for 1.

    Returns the unique reduced basis as a list of normalized packed dicts
    sorted by ascending leading key.
    """
    codec = engine.codec
    one_key = codec.one_key
    basis = []
    plain_lts = []
    sugars = []
    reducers = []
    pairs = {}

    def install(terms, sugar):
        entry = engine.reducer_entry(terms)
        _update_pairs(plain_lts, sugars, pairs, entry[1], sugar, codec)
        basis.append(terms)
        reducers.append(entry)
        reducers.sort(key=lambda red: red[4])

    for t in gens:
        if not t:
            continue
        t = engine.reduce(t, reducers)
        if not t:
            continue
        if max(t) == one_key:
            raise _UnitIdeal()
        install(t, max(codec.degree(m) for m in t))

    while pairs:
        (i, j), pair_data = min(pairs.items(), key=lambda kv: (kv[1], kv[0]))
        sugar = pair_data[0]
        del pairs[(i, j)]
        s = engine.spoly(basis[i], basis[j])
        if not s:
            continue
        r = engine.reduce(s, reducers)
        if not r:
            continue
        if max(r) == one_key:
            raise _UnitIdeal()
        install(r, sugar)

    if not basis:
        return []

    # minimal set: drop elements whose leading monomial another one divides
    guard = codec.guard
    by_lt = sorted(range(len(basis)), key=lambda k: basis[k] and max(basis[k]))
    kept = []
    for k in by_lt:
        if not any(
            _pdivides(plain_lts[j], plain_lts[k], guard) for j in kept
        ):
            kept.append(k)
    elems = [basis[k] for k in kept]

    # inter-reduce to the unique reduced basis
    for _ in range(len(elems) + 1):
        changed = False
        for idx in range(len(elems)):
            others = [
                engine.reducer_entry(t)
                for pos, t in enumerate(elems)
                if pos != idx and t
            ]
            r = engine.reduce(elems[idx], others)
            if r != elems[idx]:
                changed = True
                elems[idx] = r
        if not changed:
            break
    elems = [t for t in elems if t]
    elems.sort(key=max)
    return elems


def _update_pairs(plain_lts, sugars, pairs, new_plain, new_sugar, codec):
    """Install pairs for a new element, pruning by the standard criteria."""
    t = len(plain_lts)
    n = codec.nvars
    guard = codec.guard
    cand = {i: _plcm(lt_i, new_plain, n) for i, lt_i in enumerate(plain_lts)}
    surviving = {}
    remaining = dict(cand)
    for i in sorted(cand):
        big = remaining.pop(i)
        coprime = big == plain_lts[i] + new_plain
        others = list(remaining.values()) + list(surviving.values())
        if coprime or not any(
            _pdivides(other, big, guard) for other in others
        ):
            surviving[i] = big
    for (i, j) in list(pairs):
        big = pairs[(i, j)][2]
        if (
            _pdivides(new_plain, big, guard)
            and _plcm(plain_lts[i], new_plain, n) != big
            and _plcm(plain_lts[j], new_plain, n) != big
        ):
            del pairs[(i, j)]
    for i, big in surviving.items():
        if big != plain_lts[i] + new_plain:  # drop coprime leading terms
            sugar = max(
                sugars[i] + _pdegree(big - plain_lts[i]),
                new_sugar + _pdegree(big - new_plain),
            )
            pairs[(i, t)] = (sugar, codec.key_from_plain(big), big)
    plain_lts.append(new_plain)
    sugars.append(new_sugar)


# ---------------------------------------------------------------------------
# multi-modular driver over the rationals


_PRIME_CEILING = (1 << 62) - 1
_PRIME_AGENDA = []
# Safety valve only: reconstruction is accepted solely after agreement with a
# fresh prime (plus an exact check when small), so a generous cap costs
# nothing on easy inputs while still terminating if an invariant breaks.
# 512 primes give a CRT modulus of ~31,000 bits.
_MAX_MODULAR_PRIMES = 512
_EXACT_CHECK_BIT_CAP = 120_000


def _agenda_prime(index: int) -> int:
    """The index-th prime below 2^62, descending; cached and deterministic."""
    while len(_PRIME_AGENDA) <= index:
        candidate = (_PRIME_AGENDA[-1] if _PRIME_AGENDA else _PRIME_CEILING) - 1
        if candidate % 2 == 0:
            candidate -= 1
        while not is_probable_prime(candidate):
            candidate -= 2
        _PRIME_AGENDA.append(candidate)
    return _PRIME_AGENDA[index]


def _rational_reconstruct(residue: int, modulus: int):
    """num/den with |num|, den <= sqrt(modulus/2), or None if there is none."""
    if residue == 0:
        return Fraction(0)
    bound = math.isqrt(modulus // 2)
    r0, r1 = modulus, residue
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or math.gcd(r1, t1) != 1:
        return None
    if t1 < 0:
        return Fraction(-r1, -t1)
    return Fraction(r1, t1)


class _CrtState:
    """Accumulated residues for one staircase across agreeing primes."""

    def __init__(self):
        self.modulus = 1
        self.elements = None  # list of dicts: packed key -> residue
        self.last_candidate = None

    def add(self, p, modgb):
        if self.elements is None:
            self.modulus = p
            self.elements = [dict(t) for t in modgb]
            return
        m0 = self.modulus
        inv = pow(m0 % p, p - 2, p)
        new_mod = m0 * p
        for accum, fresh in zip(self.elements, modgb):
            for mono in set(accum) | set(fresh):
                a = accum.get(mono, 0)
                b = fresh.get(mono, 0)
                accum[mono] = (a + (b - a) * inv % p * m0) % new_mod
        self.modulus = new_mod

    def reconstruct(self):
        """All coefficients as exact rationals, or None if not yet stable."""
        out = []
        for accum in self.elements:
            elem = {}
            for mono, residue in accum.items():
                value = _rational_reconstruct(residue, self.modulus)
                if value is None:
                    return None
                if value:
                    elem[mono] = value
            if not elem:
                return None
            out.append(elem)
        return out


def _candidate_mod_p(candidate, p):
    """Candidate (Fraction dicts) reduced mod p as monic dicts, or None."""
    out = []
    for elem in candidate:
        target = {}
        for mono, value in elem.items():
            den = value.denominator % p
            if den == 0:
                return None
            v = value.numerator % p * pow(den, p - 2, p) % p
            if v:
                target[mono] = v
        if not target:
            return None
        lt = max(target)
        inv = pow(target[lt], p - 2, p)
        out.append({m: c * inv % p for m, c in target.items()})
    return out


def _clear_denominators(elem):
    denom = 1
    for v in elem.values():
        denom = denom * v.denominator // math.gcd(denom, v.denominator)
    return _IntegerArith.normalize(
        {m: int(v * denom) for m, v in elem.items()}
    )


def _exact_size(candidate_int) -> int:
    return sum(
        abs(c).bit_length() for t in candidate_int for c in t.values()
    )


def _exact_basis_check(gens_int, candidate_int, codec) -> bool:
    """Over the rationals: S-polynomials and generators all reduce to zero."""
    arith = _IntegerArith(codec)
    reducers = sorted(
        (arith.reducer_entry(t) for t in candidate_int),
        key=lambda red: red[4],
    )
    plain_lts = []
    sugars = []
    pairs = {}
    for t in candidate_int:
        pl = codec.plain(max(t))
        _update_pairs(plain_lts, sugars, pairs, pl, _pdegree(pl), codec)
    for (i, j) in pairs:
        s = arith.spoly(candidate_int[i], candidate_int[j])
        if s and arith.reduce(s, reducers):
            return False
    for t in gens_int:
        if t and arith.reduce(t, reducers):
            return False
    return True


def _modular_groebner(gens_int, codec):
    """Reduced rational basis of primitive-integer packed generators.

    Raises _UnitIdeal when 1 is in the ideal, InternalInvariantError when
    the prime agenda is exhausted without a verified reconstruction.
    """
    states = {}
    unit_votes = 0
    index = 0
    used = 0
    while used < _MAX_MODULAR_PRIMES:
        p = _agenda_prime(index)
        index += 1
        if any(c % p == 0 for t in gens_int for c in t.values()):
            continue
        used += 1
        engine = _ModularArith(p, codec)
        try:
            modgb = _core_buchberger(
                [{m: c % p for m, c in t.items()} for t in gens_int], engine
            )
        except _UnitIdeal:
            # the whole ring mod p; trust it only when a second prime agrees
            unit_votes += 1
            if unit_votes >= 2:
                raise
            continue
        staircase = tuple(max(t) for t in modgb)
        state = states.get(staircase)
        if state is None:
            state = states[staircase] = _CrtState()
        elif state.last_candidate is not None:
            if _candidate_mod_p(state.last_candidate, p) == modgb:
                candidate_int = [
                    _clear_denominators(e) for e in state.last_candidate
                ]
                if _exact_size(candidate_int) > _EXACT_CHECK_BIT_CAP or (
                    _exact_basis_check(gens_int, candidate_int, codec)
                ):
                    return candidate_int
        state.add(p, modgb)
        state.last_candidate = state.reconstruct()
    from .detector import InternalInvariantError

    raise InternalInvariantError(
        "modular basis reconstruction did not stabilize"
    )


# ---------------------------------------------------------------------------
# drivers


def _groebner_elems(ideal: Ideal, codec):
    """Reduced basis as packed dicts under `codec`; raises _UnitIdeal."""
    gens = [_to_engine(g, codec) for g in ideal.generators]
    gens = [t for t in gens if t]
    if not gens:
        return []
    field = ideal.ring.field
    if field == QQ:
        return _modular_groebner(gens, codec)
    if isinstance(field, PrimeField):
        engine = _ModularArith(field.modulus, codec)
        return _core_buchberger(gens, engine)
    raise TypeError("unsupported coefficient field %r" % (field,))


def buchberger(ideal: Ideal, order: LexOrder = None) -> GroebnerBasis:
    """Reduced Groebner basis of `ideal` under `order` (default lex).

    Basis elements come out normalized (primitive integer coefficients with
    positive leading coefficient over the rationals, monic over a prime
    field) and sorted by ascending leading monomial.
    """
    ring = ideal.ring
    n = ring.nvars
    if order is None:
        order = LexOrder.default(n)
    if len(order.permutation) != n:
        raise ValueError("order permutation length does not match the ring")
    codec = _LexCodec(order.permutation)
    try:
        elems = _groebner_elems(ideal, codec)
    except _UnitIdeal:
        return GroebnerBasis(ring, order, (ring.one(),))
    final = tuple(_from_engine(t, codec, ring) for t in elems)
    return GroebnerBasis(ring, order, final)


def graded_basis(ideal: Ideal) -> list:
    """Reduced basis under the graded order used for dimension counts.

    Returns [1] when 1 is in the ideal.  Useful as a compact generating set
    to seed several eliminations of the same ideal.
    """
    ring = ideal.ring
    codec = _BlockCodec(tuple(range(ring.nvars)), ())
    try:
        elems = _groebner_elems(ideal, codec)
    except _UnitIdeal:
        return [ring.one()]
    return [_from_engine(t, codec, ring) for t in elems]


def eliminate(ideal: Ideal, keep, seed_basis=None) -> list:
    """Generators of the intersection with the subring on the kept variables.

    The eliminated variables are removed one at a time with a block order
    whose leading block is the single variable being dropped (degree-graded
    elsewhere); each stage starts from the previous stage's basis, and the
    whole chain starts from a graded basis of the input.  One-at-a-time
    elimination keeps the intermediate staircases far smaller than a single
    lex-style computation while producing generators of the same
    elimination ideal.  `seed_basis`, when given, must generate the same
    ideal and replaces the initial graded-basis computation.  Returns [1]
    when 1 is in the ideal.
    """
    ring = ideal.ring
    n = ring.nvars
    keep = frozenset(keep)
    if not keep or not all(isinstance(i, int) and 0 <= i < n for i in keep):
        raise ValueError("keep must be a nonempty set of variable indices")
    drop = [i for i in range(n) if i not in keep]
    try:
        if seed_basis is not None:
            current = list(seed_basis)
        else:
            codec = _BlockCodec(tuple(range(n)), ())
            elems = _groebner_elems(ideal, codec)
            current = [_from_engine(t, codec, ring) for t in elems]
        for i in drop:
            codec = _BlockCodec(
                (i,), tuple(j for j in range(n) if j != i)
            )
            elems = _groebner_elems(Ideal(ring, current), codec)
            polys = [_from_engine(t, codec, ring) for t in elems]
            current = [p for p in polys if i not in p.support_variables()]
    except _UnitIdeal:
        return [ring.one()]
    return [p for p in current if p.support_variables() <= keep]


def affine_dimension(ideal: Ideal) -> int:
    """Krull dimension of the zero set; -1 when the zero set is empty.

    Computed combinatorially from the leading monomials of a degree-graded
    basis: the dimension is the largest size of a variable subset that
    meets the support of no leading monomial.
    """
    n = ideal.ring.nvars
    codec = _BlockCodec(tuple(range(n)), ())
    try:
        elems = _groebner_elems(ideal, codec)
    except _UnitIdeal:
        return -1
    lts = [codec.unpack(max(t)) for t in elems]
    return _dimension_from_lts(lts, n)


def _dimension_from_lts(lts, n: int) -> int:
    masks = []
    for lt in lts:
        mask = 0
        for i, exp in enumerate(lt):
            if exp:
                mask |= 1 << i
        masks.append(mask)
    best = -1
    for subset in range(1 << n):
        ok = True
        for mask in masks:
            if mask & ~subset == 0:
                ok = False
                break
        if ok:
            size = bin(subset).count("1")
            if size > best:
                best = size
    return best


def elimination_ideal(gb: GroebnerBasis, keep) -> list:
    """Basis elements supported on the kept variables.

    Requires the basis order to end with exactly the kept variables; the
    selected elements then generate (and are a reduced basis of) the
    intersection with that subring.
    """
    keep = frozenset(keep)
    n = gb.ring.nvars
    if not keep or not all(isinstance(i, int) and 0 <= i < n for i in keep):
        raise ValueError("keep must be a nonempty set of variable indices")
    tail = gb.order.permutation[n - len(keep) :]
    if set(tail) != keep:
        raise ValueError(
            "basis order does not place the kept variables in its tail"
        )
    out = []
    for e in gb.elements:
        if e.support_variables() <= keep:
            out.append(e)
    return out


def ideal_dimension(gb: GroebnerBasis) -> int:
    """Combinatorial Krull dimension from leading monomials; -1 when 1 is in
    the ideal (empty zero set)."""
    if gb.contains_one():
        return -1
    return _dimension_from_lts(
        [e.leading_monomial(gb.order) for e in gb.elements], gb.ring.nvars
    )


def with_rabinowitsch(ideal: Ideal, h: Polynomial) -> Ideal:
    """Adjoin t*h - 1 in a ring with a fresh variable t prepended.

    The zero set of the result is the part of V(ideal) outside V(h); the
    fresh variable sits first so the default lex order eliminates it.
    """
    if h.ring != ideal.ring:
        raise ValueError("h lives outside the ideal's ring")
    if h.is_zero():
        raise ValueError("localization requires a nonzero h")
    name = fresh_variable_name(ideal.ring.variables, "t")
    new_ring = extend_ring(ideal.ring, name, front=True)
    t = new_ring.variable(name)
    lifted = [lift_polynomial(g, new_ring) for g in ideal.generators]
    lifted.append(t * lift_polynomial(h, new_ring) - new_ring.one())
    return Ideal(new_ring, lifted)
