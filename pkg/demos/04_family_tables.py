"""Sweep the Brieskorn families and print them in table layout."""

from pin2floer.report import FamilyPattern, family_reports, to_markdown

for text, ks in (("2,5,20k+11", range(1, 4)), ("2,5,20k-1", range(1, 4)), ("2,7,28k-1", range(1, 3))):
    pattern = FamilyPattern.parse(text)
    print(f"Sigma({pattern}), k = {ks.start}..{ks.stop - 1}")
    print(to_markdown(family_reports(pattern, ks)))
