"""
Controlled-Z gate time of one system at distance d, with its coherence ratio and verdict.
"""

import logging
import sys

import hydra
import pandas as pd
from omegaconf import DictConfig

from dipising.data.catalog import PhysicalSystem
from dipising.data.feasibility import gate_report
from dipising.errors import DipolarError
from dipising.modeling.utils import require_positive, resolve_system, setup_environment
from dipising.output.writers import ResultWriter

log = logging.getLogger(__name__)


def cmd_gatetime(system: PhysicalSystem, d: float, writer: ResultWriter) -> str:
    report = gate_report(system, d)
    log.info("%s at d=%.3e m: t_cz=%.6e s (%s)", report.system, report.d, report.t_cz, report.verdict)
    return writer.render(pd.DataFrame([report.to_record()]))


@hydra.main(config_path="../../configs", config_name="gatetime", version_base="1.3")
def main(cfg: DictConfig):
    setup_environment()
    try:
        d = require_positive("d", cfg.d)
        system = resolve_system(cfg)
        writer: ResultWriter = hydra.utils.instantiate(cfg.format)
        sys.stdout.write(cmd_gatetime(system, d, writer))
    except DipolarError as e:
        log.error("gatetime failed: %s", e)
        sys.exit(1)


if __name__ == "__main__":
    main()
