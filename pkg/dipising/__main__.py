"""
Entry point: `python -m dipising <subcommand> [hydra overrides]`, e.g.
`python -m dipising gatetime system=Rb87 d=1e-7`.
"""

import sys

from dipising.modeling import cluster, evolve, gatetime, sweep, systems

COMMANDS = {
    "systems": systems.main,
    "gatetime": gatetime.main,
    "evolve": evolve.main,
    "sweep": sweep.main,
    "cluster": cluster.main,
}


def main():
    if len(sys.argv) < 2 or sys.argv[1] not in COMMANDS:
        sys.stderr.write(f"usage: dipising {{{','.join(COMMANDS)}}} [key=value ...]\n")
        sys.exit(2)
    command = sys.argv.pop(1)
    COMMANDS[command]()


if __name__ == "__main__":
    main()
