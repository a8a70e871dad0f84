"""Follow genus-3 candidates through each filter and list the uniruled witnesses.

Run: python3 demos/genus3_walkthrough.py
"""

from jacquot.character import CharacterSpec, age, power
from jacquot.eichler import e_tilde_for_power
from jacquot.engine import Status, classify_genus
from jacquot.lefschetz import fix_profile
from jacquot.rh import admissible_system


def show(n, exps):
    chi = CharacterSpec.from_exponents(n, exps)
    print(f"\n{chi}  age {age(chi)}")
    profile = fix_profile(chi)
    print(f"  fixed-point profile: {getattr(profile, 'fix', profile)}")
    for d in range(1, n):
        if n % d == 0:
            r = e_tilde_for_power(chi, d)
            print(f"  E~ for sigma^{d}: {r.describe()}")
    system = admissible_system(chi)
    if system is not None:
        print(f"  admissible r*: {system.r_star}")
    print(f"  ages of powers: {[str(age(power(chi, d))) for d in range(1, n)]}")


report = classify_genus(3)
print("genus 3 status counts per order:")
for n, verdicts in report.verdicts.items():
    counts = {}
    for v in verdicts:
        counts[v.status.value] = counts.get(v.status.value, 0) + 1
    print(f"  N={n:>2}  {counts}")

print("\nwitnesses (age < 1 for the generator itself):")
for w in report.witnesses:
    print(f"  order {w.order:>2} {w.exponents} age {w.age}  curve {w.curve or '-'}")

# a witness, a Reid-passing realizable character and an E~ rejection
show(12, [1, 2, 5])
show(7, [1, 2, 4])
show(6, [1, 1, 2])

passing = [v.character for v in report.realizable() if v.status is Status.REALIZABLE_REID_PASS]
print(f"\n{len(passing)} realizable characters pass Reid for every power")
