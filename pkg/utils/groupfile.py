from nucleo.group import PermGroup
from nucleo.permutation import parse_permutation
from utils.errors import GroupFileFormatError, PermutationParseError

# Formato (UTF-8):
#   name: <texto>
#   degree: <n>
#   uma permutação geradora por linha, em notação de ciclos 1-based
# '#' inicia comentário até o fim da linha; linhas vazias são ignoradas.


class GroupFile:
    def __init__(self, name, degree, generators):
        self.name = name
        self.degree = degree
        self.generators = list(generators)

    def to_group(self):
        return PermGroup(self.generators, degree=self.degree, name=self.name)

    def to_text(self):
        lines = [f"name: {self.name}", f"degree: {self.degree}"]
        lines.extend(g.to_cycle_string() for g in self.generators)
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_group(cls, G):
        return cls(G.name or 'sem-nome', G.degree, G.generators)

    @classmethod
    def from_text(cls, text, path=None):
        name = None
        degree = None
        degree_line = None
        generators = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition(':')
            key = key.strip().lower()
            if sep and key == 'name':
                if name is not None:
                    raise GroupFileFormatError("Linha 'name:' duplicada", number, path)
                if degree is not None or generators:
                    raise GroupFileFormatError("'name:' deve vir antes do grau e dos geradores", number, path)
                name = value.strip()
                continue
            if sep and key == 'degree':
                if degree is not None:
                    raise GroupFileFormatError(
                        f"Linha 'degree:' duplicada (primeira na linha {degree_line})", number, path)
                try:
                    degree = int(value.strip())
                except ValueError:
                    raise GroupFileFormatError(f"Grau inválido: {value.strip()!r}", number, path)
                if degree <= 0:
                    raise GroupFileFormatError(f"Grau deve ser positivo: {degree}", number, path)
                degree_line = number
                continue
            if degree is None:
                raise GroupFileFormatError("Gerador antes da linha 'degree:'", number, path)
            try:
                generators.append(parse_permutation(line, degree))
            except PermutationParseError as e:
                raise GroupFileFormatError(str(e), number, path) from e
        if name is None:
            raise GroupFileFormatError("Linha 'name:' ausente", 1, path)
        if degree is None:
            raise GroupFileFormatError("Linha 'degree:' ausente", 1, path)
        return cls(name, degree, generators)


def parse_group_text(text, path=None):
    return GroupFile.from_text(text, path).to_group()


def parse_group_file(path):
    """Lê um arquivo de grupo. Erros de E/S propagam como OSError."""
    with open(path, encoding='utf-8') as f:
        text = f.read()
    return parse_group_text(text, path=str(path))


def format_group_file(G):
    """Forma canônica: ciclos ordenados pelo menor ponto, um gerador por linha."""
    return GroupFile.from_group(G).to_text()


def write_group_file(G, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_group_file(G))
