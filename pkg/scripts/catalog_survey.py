#!/usr/bin/env python3
"""Survey the built-in catalog: one line per link with its Alexander
polynomial, nullity, signature extremum, and certified genus bounds."""

from linkbound import (alexander_from_seifert, assemble_report,
                       builtin_catalog, link_nullity, signature_function)


def main():
    header = f"{'name':24} {'m':>2} {'beta':>4} {'max|s|':>6} {'g4':>9}  alexander"
    print(header)
    print("-" * len(header))
    for entry in builtin_catalog():
        data = entry.seifert_data()
        f = signature_function(data)
        report = assemble_report(data)
        upper = "?" if report.upper is None else str(report.upper)
        g4 = f"[{report.lower}, {upper}]"
        print(f"{entry.name:24} {data.components:>2} {link_nullity(data):>4} "
              f"{f.max_abs_sigma():>6} {g4:>9}  {alexander_from_seifert(data)}")


if __name__ == "__main__":
    main()
