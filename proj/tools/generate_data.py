#!/usr/bin/env python3
"""Regenerates the bundled structure-constant files under data/.

Each algebra is built symbolically from its generators: the comultiplication
is extended as an algebra map into H (x) H and the antipode as an
anti-homomorphism, so the emitted constants follow from the generator
relations alone. The C++ axiom checker is the authority that the output is
actually a Hopf algebra.
"""

import json
import os
import sys


def vec_add(a, b, p):
    out = dict(a)
    for k, c in b.items():
        out[k] = (out.get(k, 0) + c) % p
    return {k: c for k, c in out.items() if c % p}


def vec_scale(s, a, p):
    return {k: (s * c) % p for k, c in a.items() if (s * c) % p}


class Algebra:
    """Finite-dimensional algebra with a basis-indexed multiplication."""

    def __init__(self, dim, p, mul_basis, unit_index=0):
        self.dim = dim
        self.p = p
        self.mul_basis = mul_basis  # (i, j) -> {k: coeff}
        self.unit = {unit_index: 1}

    def mul(self, x, y):
        out = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for k, ck in self.mul_basis(i, j).items():
                    out[k] = (out.get(k, 0) + ci * cj * ck) % self.p
        return {k: c for k, c in out.items() if c}

    def power(self, x, n):
        acc = dict(self.unit)
        for _ in range(n):
            acc = self.mul(acc, x)
        return acc


def tensor_algebra(alg):
    """H (x) H with basis index (i, j)."""

    def mul(a, b):
        i1, j1 = a
        i2, j2 = b
        out = {}
        for k1, c1 in alg.mul_basis(i1, i2).items():
            for k2, c2 in alg.mul_basis(j1, j2).items():
                out[(k1, k2)] = (out.get((k1, k2), 0) + c1 * c2) % alg.p
        return {k: c for k, c in out.items() if c}

    t = Algebra.__new__(Algebra)
    t.dim = alg.dim * alg.dim
    t.p = alg.p
    t.mul_basis = mul
    t.unit = {(0, 0): 1}
    return t


def emit(name, p, dim, mult_entries, unit, comult_entries, counit, antipode_entries, out_dir):
    doc = {
        "name": name,
        "field": {"type": "fp", "p": p},
        "dim": dim,
        "mult": mult_entries,
        "unit": unit,
        "comult": comult_entries,
        "counit": counit,
        "antipode": antipode_entries,
    }
    path = os.path.join(out_dir, name + ".json")
    with open(path, "w") as f:
        # one top-level key per line, entry lists kept compact
        body = ",\n".join(' "%s": %s' % (k, json.dumps(v, separators=(", ", ": ")))
                          for k, v in doc.items())
        f.write("{\n" + body + "\n}\n")
    print("wrote", path)


def hopf_from_generators(name, p, dim, mul_basis, comult_gen, counit_vec, antipode_gen,
                         factorizations, out_dir):
    """factorizations[i] = list of generator ids whose product is basis i.

    comult_gen / antipode_gen map generator id -> element of H(x)H / H.
    """
    alg = Algebra(dim, p, mul_basis)
    talg = tensor_algebra(alg)

    mult_entries = []
    for i in range(dim):
        for j in range(dim):
            for k, c in sorted(mul_basis(i, j).items()):
                mult_entries.append([i, j, k, c % p])

    comult_entries = []
    antipode_entries = []
    for i in range(dim):
        gens = factorizations[i]
        delta = dict(talg.unit)
        for g in gens:
            delta = talg.mul(delta, comult_gen[g])
        for (a, b), c in sorted(delta.items()):
            comult_entries.append([i, a, b, c % p])
        s = dict(alg.unit)
        for g in reversed(gens):  # anti-homomorphism
            s = alg.mul(s, antipode_gen[g])
        for k, c in sorted(s.items()):
            antipode_entries.append([i, k, c % p])

    unit = [1 if i == 0 else 0 for i in range(dim)]
    emit(name, p, dim, mult_entries, unit, comult_entries, counit_vec, antipode_entries, out_dir)


def group_algebra(name, p, elements, mul, inv, out_dir):
    """Group algebra: Delta(g) = g (x) g, eps = 1, S(g) = g^{-1}."""
    dim = len(elements)
    index = {g: i for i, g in enumerate(elements)}
    mult_entries = [[i, j, index[mul(elements[i], elements[j])], 1]
                    for i in range(dim) for j in range(dim)]
    comult_entries = [[i, i, i, 1] for i in range(dim)]
    antipode_entries = [[i, index[inv(elements[i])], 1] for i in range(dim)]
    unit = [1 if i == 0 else 0 for i in range(dim)]
    counit = [1] * dim
    emit(name, p, dim, mult_entries, unit, comult_entries, counit, antipode_entries, out_dir)


def cyclic(name, p, order, out_dir):
    group_algebra(name, p, list(range(order)),
                  lambda a, b: (a + b) % order, lambda a: (-a) % order, out_dir)


def s3(name, p, out_dir):
    import itertools
    elements = sorted(itertools.permutations(range(3)))
    elements.remove((0, 1, 2))
    elements.insert(0, (0, 1, 2))  # identity first

    def mul(a, b):  # (a o b)(x) = a[b[x]]
        return tuple(a[b[x]] for x in range(3))

    def inv(a):
        out = [0, 0, 0]
        for x in range(3):
            out[a[x]] = x
        return tuple(out)

    group_algebra(name, p, elements, mul, inv, out_dir)


def sweedler(name, p, out_dir):
    # basis g^a x^b at index a + 2b: (1, g, x, gx); x g = -g x
    def idx(a, b):
        return a + 2 * b

    def mul_basis(i, j):
        b, a = divmod(i, 2)
        d, c = divmod(j, 2)
        if b + d >= 2:
            return {}
        sign = (-1) ** (b * c)
        return {idx((a + c) % 2, b + d): sign % p}

    G, X = "g", "x"
    comult_gen = {G: {(idx(1, 0), idx(1, 0)): 1},
                  X: {(idx(0, 1), 0): 1, (idx(1, 0), idx(0, 1)): 1}}
    antipode_gen = {G: {idx(1, 0): 1}, X: {idx(1, 1): (-1) % p}}
    factorizations = [None] * 4
    for a in (0, 1):
        for b in (0, 1):
            factorizations[idx(a, b)] = [G] * a + [X] * b
    counit = [1, 1, 0, 0]
    hopf_from_generators(name, p, 4, mul_basis, comult_gen, counit, antipode_gen,
                         factorizations, out_dir)


def taft3(name, p, q, out_dir):
    # basis g^a x^b at index a + 3b, a, b in {0,1,2}; x g = q g x
    def idx(a, b):
        return a + 3 * b

    def mul_basis(i, j):
        b, a = divmod(i, 3)
        d, c = divmod(j, 3)
        if b + d >= 3:
            return {}
        return {idx((a + c) % 3, b + d): pow(q, b * c, p)}

    G, X = "g", "x"
    comult_gen = {G: {(idx(1, 0), idx(1, 0)): 1},
                  X: {(idx(0, 1), 0): 1, (idx(1, 0), idx(0, 1)): 1}}
    # S(g) = g^2, S(x) = -g^{-1} x = -g^2 x
    antipode_gen = {G: {idx(2, 0): 1}, X: {idx(2, 1): (-1) % p}}
    factorizations = [None] * 9
    for a in range(3):
        for b in range(3):
            factorizations[idx(a, b)] = [G] * a + [X] * b
    counit = [1, 1, 1, 0, 0, 0, 0, 0, 0]
    hopf_from_generators(name, p, 9, mul_basis, comult_gen, counit, antipode_gen,
                         factorizations, out_dir)


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else \
        os.path.join(os.path.dirname(__file__), "..", "data")
    os.makedirs(out_dir, exist_ok=True)
    cyclic("kc2_f5", 5, 2, out_dir)
    cyclic("kc3_f7", 7, 3, out_dir)
    s3("s3_f7", 7, out_dir)
    sweedler("sweedler_f5", 5, out_dir)
    taft3("taft3_f7", 7, 2, out_dir)


if __name__ == "__main__":
    main()
