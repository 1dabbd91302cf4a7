import numpy as np

from reqlint.scoring.alpha import AlphaProfile
from reqlint.scoring.testability import score_requirement

print("== SCORING ONE REQUIREMENT =============================")

TEXT = ("The system will employ on demand asynchronous loading "
        "for faster execution of pages.")

print("1. the requirement...")
print("  ", TEXT)

print("2. the owning project...")
profile = AlphaProfile(domains=("EC", "CS"),
                       criticality="business_critical",
                       requirement_type="functional",
                       template="single_sentence")
alphas = {policy: profile.alpha(policy)
          for policy in ("softened", "hardened")}
for policy, value in alphas.items():
    print(f"   alpha {policy}: {value:.4f}")

print("3. detecting smells...")
score = score_requirement(TEXT, alphas)
for f in score.findings:
    print(f"   {f.start:3d}-{f.end:<3d} {f.smell.column:<20s}"
          f" {f.matched_text!r}  ({f.source})")

print("4. counting...")
print("   words:", score.n_words)
print("   smelly words:", score.n_smelly_words)
print("   distinct smells:", score.n_smell_types)
print("   sentences:", score.n_sentences)

print("5. scoring...")
ratio = score.n_smelly_words / score.n_words
by_hand = 1.0 - ratio ** (1.0 / score.n_smell_types)
print(f"   smelly ratio: {ratio:.4f}")
print(f"   clarity = 1 - ratio^(1/t) = {by_hand:.4f}")
assert np.isclose(score.clarity, by_hand)
for policy in ("softened", "hardened"):
    print(f"   testability ({policy}): {score.testability[policy]:.4f}")
print("   single sentence, so testability equals clarity")
