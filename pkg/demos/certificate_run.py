"""Run every certificate at a small trial count and print the report lines.

    python3 demos/certificate_run.py [--trials 500]
"""

from __future__ import annotations

import argparse

from moduli_orders.certificates import IDENTITY_CATALOG, SAMPLED_CATALOG, CertificateSpec, run_certificate


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=500)
    args = parser.parse_args()
    for cert_id in sorted(IDENTITY_CATALOG) + sorted(SAMPLED_CATALOG):
        print(run_certificate(CertificateSpec(cert_id, trials=args.trials)).line())


if __name__ == "__main__":
    main()
