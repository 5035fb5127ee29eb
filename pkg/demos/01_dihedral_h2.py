# H2: the symmetry group of the regular pentagon.
#
# The three defining relations are already closed under composition, so
# nothing has to be added and the standard words list the ten group elements.

from gsbasis import complete, count_standard, enumerate_standard, is_closed, preset_presentation

R = preset_presentation("H2")
G = R.generators
for r in R.rules:
    print(r.format(G))

closed, witness = is_closed(R)
print("closed:", closed)

report = complete(R)
print("rules added:", report.rules_added)

words = list(enumerate_standard(R))
print(count_standard(R), "standard words:")
print(", ".join(G.format_word(w) for w in words))
