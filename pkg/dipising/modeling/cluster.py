"""
Prepares the graph state of an edge-list file and checks every stabilizer expectation against 1.
"""

import logging
import sys
from pathlib import Path

import hydra
import pandas as pd
from omegaconf import DictConfig

from dipising.cluster.graphstate import QubitGraph, graph_state, stabilizer_expectation
from dipising.data.graphs import load_graph
from dipising.errors import DipolarError, GraphParseError
from dipising.output.writers import ResultWriter
from dipising.modeling.utils import setup_environment

log = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"


def cmd_cluster(graph: QubitGraph | str | Path, writer: ResultWriter, tolerance: float = 1e-10) -> str:
    if not isinstance(graph, QubitGraph):
        graph = load_graph(graph)
    state = graph_state(graph)
    expectations = [stabilizer_expectation(state, graph, vertex) for vertex in range(graph.n_qubits)]
    statuses = [PASS if abs(value - 1) <= tolerance else FAIL for value in expectations]
    verdict = PASS if all(status == PASS for status in statuses) else FAIL
    log.info("cluster state on %d qubits: %s", graph.n_qubits, verdict)
    frame = pd.DataFrame(
        {"vertex": range(graph.n_qubits), "stabilizer_expectation": expectations, "status": statuses}
    )
    return writer.render(frame, footer=None if writer.machine_readable else verdict)


@hydra.main(config_path="../../configs", config_name="cluster", version_base="1.3")
def main(cfg: DictConfig):
    setup_environment()
    try:
        if not cfg.graph:
            raise GraphParseError("no graph file given: set graph=<path>")
        writer: ResultWriter = hydra.utils.instantiate(cfg.format)
        sys.stdout.write(cmd_cluster(cfg.graph, writer, tolerance=cfg.tolerance))
    except DipolarError as e:
        log.error("cluster failed: %s", e)
        sys.exit(1)


if __name__ == "__main__":
    main()
