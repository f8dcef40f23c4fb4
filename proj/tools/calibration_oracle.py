#!/usr/bin/env python3
"""Independently recompute the derived constants in data/calibration.csv.

Exits non-zero when a ledger value disagrees with its recipe by more than
the rounding used in the file.
"""
import csv
import pathlib
import sys

GJ_PER_TCE = 29.3076
LHV_NH3 = 18.6  # GJ/t
HHV_H2 = 141.8  # MJ/kg
NH3_PER_H2 = 17 / 3


def rows(path):
    with open(path, newline="") as f:
        lines = [line for line in f if not line.startswith("#") and line.strip()]
    return list(csv.reader(lines))


def params(path):
    # Provenance may contain commas; only the first three fields matter here.
    return {r[0]: float(r[1]) for r in rows(path)[1:]}


def main(data):
    cof = params(data / "cofiring.csv")
    sce = params(data / "scenarios.csv")
    ledger = {r[0]: float(r[1]) for r in rows(data / "calibration.csv")[1:]}

    fe_am = cof["ammonia_production_cost"] * (1 + cof["gross_margin"]) / (cof["lhv_nh3"] / GJ_PER_TCE)
    # +39.2% fuel cost at 5% co-firing means FE_am/FE_c - 1 = 0.392 / 0.05
    ratio = 0.392 / 0.05 + 1
    coal = fe_am / ratio
    e_nh3 = (1 / NH3_PER_H2) / sce["synthesis_conversion"] * HHV_H2 / 3.6 / sce["electrolyser_efficiency"]

    series = {}
    for name, year, value in rows(data / "national_co2.csv")[1:]:
        series[(name, int(year))] = float(value)
    cagr = (series[("national", 2019)] / series[("national", 2014)]) ** (1 / 5) - 1
    tibet = series[("tibet", 2014)] * (1 + cagr) ** 5

    checks = [
        ("ammonia_fuel_price_usd_per_tce", fe_am, 5e-4),
        ("coal_price_usd_per_tce", coal, 5e-4),
        ("electricity_per_t_nh3", e_nh3, 5e-5),
        ("national_co2_cagr_2014_2019", cagr, 5e-7),
        ("tibet_co2_2019", tibet, 5e-3),
        ("lhv_heating_oil", 41.868, 0),
    ]
    bad = 0
    for name, value, tol in checks:
        ok = abs(ledger[name] - value) <= tol
        bad += not ok
        print(f"{'ok  ' if ok else 'FAIL'} {name}: ledger {ledger[name]} recomputed {value:.6f}")
    if abs(cof["coal_price"] - ledger["coal_price_usd_per_tce"]) > 1e-9:
        print("FAIL cofiring.csv coal_price differs from the ledger")
        bad += 1
    return 1 if bad else 0


if __name__ == "__main__":
    root = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data"
    sys.exit(main(root))
