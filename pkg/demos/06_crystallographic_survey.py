"""
Surveying a catalog for abelian-object structure
================================================

Run the whole pipeline over the builtin fixtures: projection-law
preconditions, subtraction counts, derived structure, and homomorphism
compatibility checks between the verified objects.
"""

from abelia import builtin, crystallographic_report, list_builtins

catalog = [builtin(name).algebra for name in list_builtins()]
report = crystallographic_report(catalog)

for entry in report.entries:
    print(f"{entry.name}: np_self={entry.np_self} np_square={entry.np_square} "
          f"subtractions={entry.subtractions} abelian={entry.abelian}")
    for anomaly in entry.anomalies:
        print("   anomaly:", anomaly)

# every homomorphism between verified objects must preserve the derived
# structure; a violation here would falsify the uniqueness story
print("homomorphism checks run:", report.hom_checks)
print("violations:", len(report.violations))
print("survey clean:", report.ok)
