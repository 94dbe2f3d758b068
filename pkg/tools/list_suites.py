# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.

from dataclasses import fields

from tabulate import tabulate

from eulerlax.suites import SUITES


def main():
    # Print the registered suites with their config defaults in a table format
    table = []
    for i, (name, suite) in enumerate(SUITES.items()):
        doc = (suite.__doc__ or "").strip().splitlines()
        defaults = ", ".join(f"{f.name}={f.default}" for f in fields(suite.config_type))
        table.append([i + 1, name, doc[0] if doc else "", defaults])
    headers = ["Index", "Suite", "Description", "Defaults"]
    print(tabulate(table, headers, tablefmt="pretty"))


if __name__ == "__main__":
    main()
