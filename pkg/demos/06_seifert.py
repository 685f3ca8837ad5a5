"""Cyclic coverings of Seifert manifolds with one exceptional fiber."""

from torusbundles.seifert import SeifertSymbol, admissible_shifts, cyclic_cover, find_lowering, seifert_genus

for text in ["Oo,1;5/3", "Oo,2;-3/4", "Oo,0;1/2"]:
    sym = SeifertSymbol.parse(text)
    found = find_lowering(sym)
    if found is None:
        print(f"({sym}) genus {seifert_genus(sym)}: already minimal")
    else:
        cover, sheets = found
        print(f"({sym}) genus {seifert_genus(sym)}  <-{sheets}-fold-  ({cover}) genus {seifert_genus(cover)}")

# Several fibers: the shifts r_i are found by solving the congruences a_i r_i = -b_i mod n.
sym = SeifertSymbol.parse("Oo,1;1/2,1/3,-5/6")
for n in range(1, 8):
    try:
        r = admissible_shifts(sym, n)
        print(f"n={n}: r={r} -> ({cyclic_cover(sym, n, r)})")
    except ValueError as exc:
        print(f"n={n}: {exc}")
