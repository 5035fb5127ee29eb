# H3: the full icosahedral group, order 120.
#
# Completion starts from six relations.  The first failing composition is the
# overlap s3 s2 s3 s1 of s3 s2 s3 with s3 s1; its normal form is the first new rule.

from gsbasis import (complete, coset_tower, count_standard, even_count, is_closed,
                     longest_standard, multiply, preset_presentation)

R = preset_presentation("H3")
G = R.generators

closed, witness = is_closed(R)
print("presentation closed:", closed)
print("witness ambiguity:", G.format_word(witness.w))
print("its normal form:", G.format_polynomial(R.normal_form(witness.value)))

report = complete(R)
S = report.system
print()
print(report.summary())
print()
for r in S.rules:
    print(" ", r.format(G))

# counting goes through the automaton of left-hand sides
print()
print("standard monomials:", count_standard(S))
print("even length:", even_count(S))
print("coset tower:", coset_tower(S).sizes)

w0 = longest_standard(S)
print("longest:", G.format_word(w0), f"(length {len(w0)})")

# right multiplication by a generator, as in a row of the action table
u = G.parse_word("s3 s2 s1 s2 s1 s3 s2 s1 s2 s3")
print(G.format_word(u), "* s1 =", G.format_word(multiply(u, (0,), S)))

print("basis closed:", is_closed(S)[0])
