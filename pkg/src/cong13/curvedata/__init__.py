"""Label-to-equation resolution from bundled fixtures and an optional remote database."""
from .store import (CurveNotFound, CurveRecord, OfflineError, RemoteSchemaError, all_fixtures,
                    fetch_remote, get_curve, parse_equation)

__all__ = ["CurveNotFound", "CurveRecord", "OfflineError", "RemoteSchemaError", "all_fixtures",
           "fetch_remote", "get_curve", "parse_equation"]
