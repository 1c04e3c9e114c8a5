import os

# Limites de enumeração e regimes exaustivos
DEFAULT_ENUM_BOUND = 10**6
EXHAUSTIVE_CENTRALIZER_LIMIT = 10**4
LATTICE_LIMIT = 500
ORACLE_LIMIT = 2000

# Ordens máximas por suíte (sobrescrevíveis na CLI)
STRUCTURAL_MAX_ORDER = 2000
CHARTAB_MAX_ORDER = 300
CHARAZ_MAX_ORDER = 1000

# Construtores
DEGREE_BUDGET = 4096

# Regimes amostrados
ABNORMAL_SAMPLE = 200
SUPPLEMENT_SAMPLE = 64

# Relatórios
SCHEMA_VERSION = 1


def _int_from_env(var, default):
    raw = os.environ.get(var)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"Variável {var} deve ser um inteiro positivo, recebido {raw!r}")
    if value <= 0:
        raise ValueError(f"Variável {var} deve ser um inteiro positivo, recebido {raw!r}")
    return value


def enumeration_bound():
    """Limite de enumeração vigente (ACG_ENUM_BOUND sobrescreve o padrão)."""
    return _int_from_env('ACG_ENUM_BOUND', DEFAULT_ENUM_BOUND)
