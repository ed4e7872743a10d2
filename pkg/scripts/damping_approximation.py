"""Closed-form polariton frequencies against exact non-Hermitian eigenvalues.

At zero detuning and for a ladder of couplings, compares the approximate
splitting Omega+ - Omega- and widths Gamma+- with the exact eigenvalues of
the damped two-mode matrix. Writes ``approximation_error.csv``.
"""

import csv

import numpy as np
from _common import output_dir_parser, prepare

from phopol.emit import fmt
from phopol.polariton import PolaritonInputs, exact_eigen_oracle, polariton_pair
from phopol.waveguide import ModeFrequencies, WaveguideParams


def main() -> None:
    args = output_dir_parser(__doc__.splitlines()[0], "results/approximation").parse_args()
    out = prepare(args.out_dir)
    params, modes = WaveguideParams(), ModeFrequencies()
    header = ["f", "split_approx", "split_exact", "rel_error", "width_approx", "width_exact_plus", "width_exact_minus"]
    with open(out / "approximation_error.csv", "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for f in np.logspace(np.log10(3e5), np.log10(3e8), 31):
            inp = PolaritonInputs(modes.omega_bar, modes.Omega_q, f, params.gamma, params.Gamma)
            pair = polariton_pair(inp)
            lp, lm = exact_eigen_oracle(inp)
            approx = pair.plus.Omega - pair.minus.Omega
            exact = (lp - lm).real
            err = abs(approx - exact) / exact
            writer.writerow([fmt(v) for v in (f, approx, exact, err, pair.plus.Gamma_eff, -lp.imag, -lm.imag)])
            print(f"|f|={f:.3e} split error={100 * err:.4f}%")
    print(f"wrote {out / 'approximation_error.csv'}")


if __name__ == "__main__":
    main()
