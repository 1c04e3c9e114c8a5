import json
from fractions import Fraction

from nucleo.group import PermGroup
from nucleo.permutation import Permutation
from utils.errors import TheoremViolationError

STATUS_PASS = 'pass'
STATUS_FAIL = 'fail'
STATUS_SKIPPED = 'skipped-capacity'
STATUSES = (STATUS_PASS, STATUS_FAIL, STATUS_SKIPPED)


def serialize_witness(value):
    """Converte elementos, subgrupos e coleções em dados JSON estáveis."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Permutation):
        return value.to_cycle_string()
    if isinstance(value, PermGroup):
        return {
            'order': value.order(),
            'generators': [g.to_cycle_string() for g in value.generators],
        }
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): serialize_witness(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        items = [serialize_witness(v) for v in value]
        return sorted(items, key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(value, (list, tuple)):
        return [serialize_witness(v) for v in value]
    return str(value)


class CheckRecord:
    def __init__(self, check_id, claim, status, witness=None):
        if status not in STATUSES:
            raise ValueError(f"Status desconhecido: {status}")
        if status == STATUS_FAIL and witness is None:
            raise ValueError(f"Falha em {check_id} sem testemunha")
        self.check_id = check_id
        self.claim = claim
        self.status = status
        self.witness = serialize_witness(witness)

    def to_dict(self):
        data = {'check_id': self.check_id, 'claim': self.claim, 'status': self.status}
        if self.witness is not None:
            data['witness'] = self.witness
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(data['check_id'], data['claim'], data['status'], data.get('witness'))

    def __eq__(self, other):
        return isinstance(other, CheckRecord) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"CheckRecord({self.check_id}: {self.status})"


class VerificationReport:
    """Registro pass/fail por afirmação verificada em um grupo."""

    def __init__(self, group, suite, engine=None, checks=None, timing=None):
        self.group = group
        self.suite = suite
        self.engine = dict(engine or {})
        self.checks = list(checks or [])
        self.timing = timing

    def record(self, check_id, claim, ok, witness=None, keep_witness=False):
        """Registra uma verificação; a testemunha só é guardada em falhas (ou se pedido)."""
        ok = bool(ok)
        status = STATUS_PASS if ok else STATUS_FAIL
        if ok and not keep_witness:
            witness = None
        elif witness is None:
            witness = {}
        self.checks.append(CheckRecord(check_id, claim, status, witness))
        return ok

    def skip(self, check_id, claim, reason):
        self.checks.append(CheckRecord(check_id, claim, STATUS_SKIPPED, {'reason': reason}))

    def merge(self, other, prefix=None):
        for c in other.checks:
            check_id = f"{prefix}.{c.check_id}" if prefix else c.check_id
            self.checks.append(CheckRecord(check_id, c.claim, c.status, c.witness))
        self.engine.update(other.engine)
        return self

    @property
    def failures(self):
        return [c for c in self.checks if c.status == STATUS_FAIL]

    @property
    def skipped(self):
        return [c for c in self.checks if c.status == STATUS_SKIPPED]

    @property
    def passed(self):
        return not self.failures

    def status_of(self, check_id):
        for c in self.checks:
            if c.check_id == check_id:
                return c.status
        raise KeyError(check_id)

    def raise_on_failure(self):
        if self.failures:
            first = self.failures[0]
            raise TheoremViolationError(
                f"{self.group} [{self.suite}] falhou em {first.check_id}: {first.claim}",
                first.witness, report=self)
        return self

    def to_dict(self):
        data = {
            'group': self.group,
            'suite': self.suite,
            'engine': serialize_witness(self.engine),
            'checks': [c.to_dict() for c in self.checks],
        }
        if self.timing is not None:
            data['timing'] = self.timing
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(data['group'], data['suite'], data.get('engine'),
                   [CheckRecord.from_dict(c) for c in data.get('checks', [])],
                   data.get('timing'))

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, VerificationReport) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return (f"VerificationReport({self.group}, {self.suite}, "
                f"{len(self.checks)} checks, {len(self.failures)} falhas)")
