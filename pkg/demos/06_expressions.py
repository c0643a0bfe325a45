# # Species expressions
#
# Small formulas over the named series, evaluated to any truncation.

from bipartite_species.dsl import evaluate, format, parse, render

for text in ["Omega(Eplus)", "E(CBP) - BP", "Quot(CBC) - CBP", "(X*X)'", "CBP^point^inv"]:
    tree = parse(text)
    value = evaluate(tree, 4)
    print(f"{render(tree):<16} = {format(value)}")
