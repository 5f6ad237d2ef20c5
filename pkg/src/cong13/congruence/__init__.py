"""Evidence for mod-n congruences of elliptic curves from traces of Frobenius."""
from .scan import (CONSISTENT, INCONCLUSIVE, REFUTED, CongruenceReport, ObstructionReport,
                   ramification_obstruction, trace_congruence_scan, triviality_screen)

__all__ = ["CONSISTENT", "INCONCLUSIVE", "REFUTED", "CongruenceReport", "ObstructionReport",
           "ramification_obstruction", "trace_congruence_scan", "triviality_screen"]
