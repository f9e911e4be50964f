#!/usr/bin/env python3
"""Run the two built-in experiments and print their reports."""

import argparse

from freebraid.scenarios import scenario_beta_prime, scenario_brunnian


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--steps", type=int, default=1000)
    parser.add_argument("--max-length", type=int, default=200)
    args = parser.parse_args()

    print("== brunnian word ==")
    print(scenario_brunnian(seed=args.seed, steps=args.steps,
                            max_length=args.max_length).format_text())
    print()
    print("== transformed braid ==")
    print(scenario_beta_prime().format_text())


if __name__ == "__main__":
    main()
