from brownian_clausius.audit import __all__ as __all_audit
from brownian_clausius.cli import __all__ as __all_cli
from brownian_clausius.densmat import __all__ as __all_densmat
from brownian_clausius.drude import __all__ as __all_drude
from brownian_clausius.effective import __all__ as __all_effective
from brownian_clausius.exceptions import __all__ as __all_exceptions
from brownian_clausius.oracles import __all__ as __all_oracles
from brownian_clausius.params import __all__ as __all_params
from brownian_clausius.specfun import __all__ as __all_specfun

__all__ = (
    __all_params
    + __all_exceptions
    + __all_specfun
    + __all_drude
    + __all_densmat
    + __all_effective
    + __all_audit
    + __all_oracles
    + __all_cli
)
