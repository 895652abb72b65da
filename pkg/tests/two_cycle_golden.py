"""Cell listing for the quiver a <-> b (arrows α: a -> b, β: b -> a), d = n = (2,2).

Rows are (forest, conditions, multipartition, dimension) in listing order.
Conditions with an empty span are written "c ∈ <> = 0".  Three rows differ
from the printed source listing; see the decisions ledger:
row 18 forest, row 22 third condition and its "(a,2α)", row 24 missing comma.
"""

ROWS = [
    ("((α,αβ,αβα),∅,∅,∅)", [], "(0,0 | 0,0)"),
    ("((α,αβ),∅,(),∅)", ["(a,1,αβα) ∈ <(a,1,α)>"], "(0,0 | 1,0)"),
    ("((α,αβ),∅,∅,())", ["(b,1,()) ∈ <(a,1,α)>", "(a,1,αβα) ∈ <(a,1,α)>"], "(0,0 | 2,0)"),
    ("((α),(α),∅,∅)", ["(a,1,αβ) ∈ <(a,1,())>"], "(1,0 | 0,0)"),
    ("((α),(),(),∅)", ["(a,2,α) ∈ <(a,1,α)>", "(a,1,αβ) ∈ <(a,1,())>"], "(1,0 | 1,0)"),
    ("((α),(),∅,())", ["(b,1,()) ∈ <(a,1,α)>", "(a,2,α) ∈ <(a,1,α)>", "(a,1,αβ) ∈ <(a,1,())>"], "(1,0 | 2,0)"),
    ("((α),∅,(β),∅)", ["(a,2,()) ∈ <(a,1,())>", "(a,1,αβ) ∈ <(a,1,())>"], "(2,0 | 0,0)"),
    ("((α),∅,∅,(β))", ["(a,2,()) ∈ <(a,1,())>", "(a,1,αβ) ∈ <(a,1,())>", "(b,1,()) ∈ <(a,1,α)>"], "(2,0 | 1,0)"),
    ("((),(α),(),∅)", ["(a,1,α) ∈ <> = 0"], "(0,0 | 1,1)"),
    ("((),(α),∅,())", ["(b,1,()) ∈ <(a,2,α)>", "(a,1,α) ∈ <> = 0"], "(0,0 | 2,1)"),
    ("((),(),(),())", ["(a,1,α) ∈ <> = 0", "(a,2,α) ∈ <> = 0"], "(0,0 | 2,2)"),
    ("((),∅,(β,βα),∅)", ["(a,1,α) ∈ <> = 0", "(a,2,()) ∈ <(a,1,())>"], "(1,0 | 1,1)"),
    ("((),∅,(β),())", ["(a,1,α) ∈ <> = 0", "(a,2,()) ∈ <(a,1,())>", "(b,1,βα) ∈ <(b,1,())>"], "(1,0 | 2,1)"),
    ("((),∅,(),(β))", ["(a,1,α) ∈ <> = 0", "(a,2,()) ∈ <(a,1,())>", "(b,1,β) ∈ <(a,1,())>"], "(2,0 | 1,1)"),
    ("((),∅,∅,(β,βα))", ["(a,1,α) ∈ <> = 0", "(a,2,()) ∈ <(a,1,())>", "(b,1,()) ∈ <> = 0"], "(1,0 | 2,2)"),
    ("(∅,(α,αβ,αβα),∅,∅)", ["(a,1,()) ∈ <> = 0"], "(1,1 | 0,0)"),
    ("(∅,(α,αβ),(),∅)", ["(a,1,()) ∈ <> = 0", "(a,2,αβα) ∈ <(a,2,α)>"], "(1,1 | 1,0)"),
    ("(∅,(α,αβ),∅,())", ["(a,1,()) ∈ <> = 0", "(a,2,αβα) ∈ <(a,2,α)>", "(b,1,()) ∈ <(a,2,α)>"], "(1,1 | 2,0)"),
    ("(∅,(α),(β),∅)", ["(a,1,()) ∈ <> = 0", "(a,2,αβ) ∈ <(a,2,())>"], "(2,1 | 0,0)"),
    ("(∅,(α),∅,(β))", ["(a,1,()) ∈ <> = 0", "(a,2,αβ) ∈ <(a,2,())>", "(b,1,()) ∈ <(a,2,α)>"], "(2,1 | 1,0)"),
    ("(∅,(),(β,βα),∅)", ["(a,1,()) ∈ <> = 0", "(a,2,α) ∈ <> = 0"], "(1,1 | 1,1)"),
    ("(∅,(),(β),())", ["(a,1,()) ∈ <> = 0", "(a,2,α) ∈ <> = 0", "(b,1,βα) ∈ <(b,1,())>"], "(1,1 | 2,1)"),
    ("(∅,(),(),(β))", ["(a,1,()) ∈ <> = 0", "(a,2,α) ∈ <> = 0", "(b,1,β) ∈ <(a,2,())>"], "(2,1 | 1,1)"),
    ("(∅,(),∅,(β,βα))", ["(a,1,()) ∈ <> = 0", "(a,2,α) ∈ <> = 0", "(b,1,()) ∈ <> = 0"], "(1,1 | 2,2)"),
    ("(∅,∅,(β,βα,βαβ),∅)", ["(a,1,()) ∈ <> = 0", "(a,2,()) ∈ <> = 0"], "(2,2 | 0,0)"),
    ("(∅,∅,(β),(β))", ["(a,1,()) ∈ <> = 0", "(a,2,()) ∈ <> = 0", "(b,1,βα) ∈ <(b,1,())>"], "(2,2 | 1,0)"),
    ("(∅,∅,∅,(β,βα,βαβ))", ["(a,1,()) ∈ <> = 0", "(a,2,()) ∈ <> = 0", "(b,1,()) ∈ <> = 0"], "(2,2 | 1,1)"),
]


def weight(mp: str) -> int:
    return sum(int(x) for x in mp.strip("()").replace("|", ",").split(","))


DIMENSIONS = [8 - weight(mp) for _, _, mp in ROWS]
