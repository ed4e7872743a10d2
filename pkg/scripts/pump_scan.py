"""Growth of the measured splitting with pump flux.

For a ladder of input fluxes, runs the strong-regime linear spectrum, finds
the two transmission maxima and compares their distance with 2|f|. Writes
``splitting_vs_pump.csv``.
"""

import csv

import numpy as np
from _common import output_dir_parser, prepare

from phopol.analysis import InsufficientPeaksError, find_extrema, measure_splitting, run_sweep
from phopol.config import parse_config
from phopol.emit import fmt


def main() -> None:
    parser = output_dir_parser(__doc__.splitlines()[0], "results/pump_scan")
    parser.add_argument("--points", type=int, default=4001, help="probe grid size per spectrum")
    args = parser.parse_args()
    out = prepare(args.out_dir)
    rows = []
    for n_in in np.logspace(9, 12, 13):
        cfg = parse_config(f"n_in = {float(n_in)!r}\npoints = {args.points}\nstart = -4e7\nstop = 4e7")
        table = run_sweep(cfg.sweep_spec())
        f = table.metadata["f_abs"]
        try:
            split = measure_splitting(find_extrema(table, "T"))
        except InsufficientPeaksError:
            split = float("nan")
        rows.append((n_in, f, split, split / (2 * f), table.metadata["regime"]))
        print(f"n_in={n_in:.3e} |f|={f:.4e} splitting={split:.4e} ratio={split / (2 * f):.4f}")
    with open(out / "splitting_vs_pump.csv", "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n_in", "f_abs", "splitting", "splitting_over_2f", "regime"])
        for n_in, f, split, ratio, regime in rows:
            writer.writerow([fmt(n_in), fmt(f), fmt(split), fmt(ratio), regime])


if __name__ == "__main__":
    main()
