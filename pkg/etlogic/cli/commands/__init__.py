"""Command groups, mounted in this order on the ``etl`` parser."""

from etlogic.cli.commands import extensional, formulas, proofs, propositional

ROUTERS = [
    formulas.router,
    propositional.router,
    extensional.router,
    proofs.router,
]
