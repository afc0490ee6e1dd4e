# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

from ..models.recursion_catalog import filter_catalog
from ..tools.jsonio import dumps
from .base_command import BaseCommand, register

COLUMNS = ("id", "kind", "equation", "hypotheses", "typo")


@register
class ListCatalog(BaseCommand):
    _name = "list"
    _description = "List the identity catalog"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--json", action="store_true")
        parser.add_argument("--filter", default="*", help="glob on entry ids")

    def run(self):
        entries = filter_catalog(self.args.filter)
        if self.args.json:
            self.emit(dumps([entry.to_json() for entry in entries]))
            return 0
        rows = [
            (
                entry.id,
                entry.kind.tag,
                entry.equation,
                " ".join(entry.hypotheses) or "-",
                "yes" if entry.typo_candidate else "",
            )
            for entry in entries
        ]
        widths = [
            max([len(col)] + [len(row[i]) for row in rows])
            for i, col in enumerate(COLUMNS)
        ]
        lines = ["  ".join(c.ljust(w) for c, w in zip(COLUMNS, widths)).rstrip()]
        for row in rows:
            lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
        self.emit("\n".join(lines))
        return 0
