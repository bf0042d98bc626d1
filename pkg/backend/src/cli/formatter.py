import json
import logging
from typing import Dict, List, Literal

import pandas as pd

OutputType = Literal['json', 'table']


class ResultFormatter:
    """Handles conversion of command results into output formats."""

    def __init__(self):
        self.logger = logging.getLogger('ResultFormatter')

    def format_result(self, data: Dict, output_type: OutputType) -> str:
        format_methods = {
            'json': self._format_json,
            'table': self._format_table,
        }

        if output_type not in format_methods:
            raise ValueError(f"Unsupported format: {output_type}")

        return format_methods[output_type](data)

    def _format_json(self, data: Dict) -> str:
        return json.dumps(data, indent=2, sort_keys=True)

    def _format_table(self, data: Dict) -> str:
        try:
            rows = self._rows(data)
            if not rows:
                return '(no rows)'
            return pd.DataFrame(rows).to_string(index=False)
        except Exception as e:
            self.logger.error(f"Error formatting table: {e}")
            raise

    def _rows(self, data: Dict) -> List[Dict]:
        if 'rows' in data:
            return [self._flat(row) for row in data['rows']]
        if 'suites' in data:
            return [
                {'suite': name, **self._flat(identity)}
                for name, report in data['suites'].items()
                for identity in self._identities(report)
            ]
        if 'groups' in data:
            return [self._flat(identity) for identity in self._identities(data)]
        if 'identities' in data:
            return [self._flat(identity) for identity in data['identities']]
        if 'tree' in data:
            return self._tree_rows(data['tree'], 0)
        return [self._flat(data)]

    def _identities(self, report: Dict) -> List[Dict]:
        # group sweeps hold one sub-report per su(M|N)
        if 'groups' in report:
            return [
                {'group': f"su({g['M']}|{g['N']})", **identity}
                for g in report['groups'] for identity in g['identities']
            ]
        return report.get('identities', [])

    def _tree_rows(self, node: Dict, depth: int) -> List[Dict]:
        row = {'depth': depth, 'crossings': node['crossings'],
               'components': node['components'], 'writhe': node['writhe']}
        if 'leaf' in node:
            return [{**row, 'step': 'leaf', 'crossing': '', 'sign': ''}]
        branch = node['branch']
        rows = [{**row, 'step': 'branch', 'crossing': branch['crossing'], 'sign': branch['sign']}]
        rows.extend(self._tree_rows(branch['switched'], depth + 1))
        rows.extend(self._tree_rows(branch['smoothed'], depth + 1))
        return rows

    @staticmethod
    def _flat(row: Dict) -> Dict:
        """Scalar fields only; counterexamples are shown as text."""
        flat = {}
        for key, value in row.items():
            if key == 'counterexample':
                flat[key] = '' if value is None else json.dumps(value, sort_keys=True)
            elif not isinstance(value, (dict, list)):
                flat[key] = value
        return flat
