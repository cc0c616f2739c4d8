"""Seeded experiment: delta of random degree-7 polynomials over F_{2^n}."""

from diffuni import ExperimentConfig, run_experiment

cfg = ExperimentConfig(m=7, n_range=[6, 7, 8], samples=50, seed=42, coherence=True)
print(run_experiment(cfg).to_jsonl())

cfg = ExperimentConfig(m=7, n_range=[8], samples=10, seed=7, mode="conjecture_fraction")
for r in run_experiment(cfg).per_n:
    print("n=8 min fraction", r.min_fraction, "epsilon", r.epsilon)
