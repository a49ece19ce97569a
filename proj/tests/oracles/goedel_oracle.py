"""Independent re-derivation of the Cantor-pairing formula codes.

Prints the codes frozen in tests/test_formula.cpp. Formulas are written as
nested tuples so this file shares nothing with the C++ parser.
"""

TAGS = dict(Zero=0, Var=1, Succ=2, Add=3, Mul=4, Eq=5, Lt=6, InI=7, Not=8, Or=9,
            And=10, Implies=11, Exists=12, Forall=13, BddExists=14, BddForall=15)
ORDINARY, FRESH = 0, 1


def pair(a, b):
    return (a + b) * (a + b + 1) // 2 + b


def fold(cs):
    if not cs:
        return 0
    if len(cs) == 1:
        return cs[0]
    return pair(cs[0], fold(cs[1:]))


def var(ns, i):
    return pair(ns, i)


def code(node):
    tag, *rest = node
    children = []
    for r in rest:
        if isinstance(r, tuple) and r[0] == "v":
            children.append(var(r[1], r[2]))
        else:
            children.append(code(r))
    return pair(TAGS[tag], fold(children))


def v(ns, i):
    return ("v", ns, i)


Z = ("Zero",)
X1 = ("Var", v(ORDINARY, 1))
X2 = ("Var", v(ORDINARY, 2))
Y = ("Var", v(ORDINARY, 0))

cases = {
    "0 = 0": ("Eq", Z, Z),
    "x1 < x2": ("Lt", X1, X2),
    "~ 0 = 0": ("Not", ("Eq", Z, Z)),
    "S(0) = 0": ("Eq", ("Succ", Z), Z),
    "exists y . x1 < y": ("Exists", v(ORDINARY, 0), ("Lt", X1, Y)),
    "(x1 + x1) = y": ("Eq", ("Add", X1, X1), Y),
    "exists y < x1 . y = x1": ("BddExists", v(ORDINARY, 0), X1, ("Eq", Y, X1)),
}
for text, node in cases.items():
    print(f'{{"{text}", "{code(node)}"}},')
print("z1 var code", code(("Var", v(FRESH, 1))))
