from nucleo.permutation import commutator
from caracteres.table import character_table
from estrutura.classes import class_of, conjugacy_classes
from estrutura.subgroups import derived_subgroup
from utils.config import CHARTAB_MAX_ORDER
from utils.errors import NotASubgroupError, TheoremViolationError
from utils.logger import log_debug


def _require_member(G, a):
    if a.degree != G.degree or a not in G:
        raise NotASubgroupError(f"Elemento {a} não pertence a {G.label()}")


def commutator_index(G):
    return G.order() // derived_subgroup(G).order()


def centralizer_order(G, a):
    """|C_G(a)| = |G| / |a^G| (órbita-estabilizador)."""
    return G.order() // len(class_of(G, a))


def is_anticentral(G, a):
    """a é anticentral se |C_G(a)| = |G:G'|."""
    _require_member(G, a)
    return centralizer_order(G, a) == commutator_index(G)


def find_anticentral_classes(G):
    """Classes de conjugação formadas por elementos anticentrais (lista possivelmente vazia)."""
    target = derived_subgroup(G).order()
    return [c for c in conjugacy_classes(G) if c.size == target]


def anticentral_elements(G):
    return sorted(x for c in find_anticentral_classes(G) for x in c.member_set)


class AnticentralCertificate:
    """As quatro condições equivalentes avaliadas de forma independente para um elemento."""

    def __init__(self, element, centralizer_order, commutator_index, cond_i, cond_ii, cond_iii,
                 cond_iv=None, class_coset_witness=None, in_derived=None):
        self.element = element
        self.centralizer_order = centralizer_order
        self.commutator_index = commutator_index
        self.cond_i = cond_i
        self.cond_ii = cond_ii
        self.cond_iii = cond_iii
        self.cond_iv = cond_iv
        self.class_coset_witness = class_coset_witness
        self.in_derived = in_derived

    @property
    def conditions(self):
        return {'i': self.cond_i, 'ii': self.cond_ii, 'iii': self.cond_iii, 'iv': self.cond_iv}

    @property
    def evaluated(self):
        return {k: v for k, v in self.conditions.items() if v is not None}

    @property
    def agree(self):
        return len(set(self.evaluated.values())) <= 1

    @property
    def is_anticentral(self):
        return self.cond_i

    def to_dict(self):
        return {
            'element': self.element.to_cycle_string(),
            'centralizer_order': self.centralizer_order,
            'commutator_index': self.commutator_index,
            'conditions': self.conditions,
            'class_coset_witness': (self.class_coset_witness.to_cycle_string()
                                    if self.class_coset_witness is not None else None),
            'in_derived': self.in_derived,
        }


def equivalence_report(G, a, use_characters=None):
    """Avalia (i) |C_G(a)| = |G:G'|, (ii) a^G = aG', (iii) [a,G] = G', (iv) anulamento dos não lineares.

    use_characters=None decide pelo limite de ordem da tabela de caracteres.
    """
    _require_member(G, a)
    D = derived_subgroup(G)
    index = G.order() // D.order()
    cls = class_of(G, a)
    c_order = G.order() // len(cls)

    cond_i = c_order == index

    coset = {a * d for d in D.elements()}
    outside = sorted(coset - cls)
    cond_ii = not outside and cls <= coset
    witness = outside[0] if outside else None

    commutators = {commutator(a, g) for g in G.elements()}
    cond_iii = commutators == D.element_set()

    if use_characters is None:
        use_characters = G.order() <= CHARTAB_MAX_ORDER
    cond_iv = None
    if use_characters:
        table = character_table(G)
        c = table.class_of_element(a)
        cond_iv = all(table.value(chi, c).is_zero for chi in table.nonlinear())

    cert = AnticentralCertificate(a, c_order, index, cond_i, cond_ii, cond_iii, cond_iv, witness,
                                  in_derived=a in D)
    log_debug(f"{G.label()} a={a}: {cert.evaluated}", "ANTICENTRAL")
    if c_order < index:
        raise TheoremViolationError(
            f"|C_G(a)| = {c_order} < |G:G'| = {index} em {G.label()}", cert.to_dict())
    if not cert.agree:
        raise TheoremViolationError(
            f"Condições discordantes para a = {a} em {G.label()}: {cert.evaluated}", cert.to_dict())
    if cond_i and D.order() > 1 and cert.in_derived:
        raise TheoremViolationError(
            f"a = {a} é anticentral em {G.label()} não abeliano mas está em G'", cert.to_dict())
    return cert
