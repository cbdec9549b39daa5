"""
Named maps, map chains and the relation-image check.

Map names: i, p, phi, chi, psi, psi:m, omega, forget, pair:i-j
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..core.errors import ContextMismatch, UnknownMap
from ..models.rewriting import RelationCheck, RewriteRule
from ..models.word import GroupContext, GroupKind, Word
from .homomorphisms import chi, embed_parity, forget_dots, omega, phi, project_parity, psi, psi_m, psi_quotient
from .normalform import pair_projection
from .oracle import RewritingOracle
from .rewriting import defining_relations

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MapSpec:
    """A named map with the context kind it reads"""

    name: str
    source: GroupKind
    apply: Callable[[Word], Word]
    source_shift: int = 0  # source strands relative to the n the map is checked at
    strands: Tuple[int, ...] = ()  # strand arguments that must exist in the source
    checkable: bool = True  # False for maps defined only on a subgroup

    def source_context(self, n: int) -> Optional[GroupContext]:
        """Source context when checked at n strands, None when the map does not apply there"""
        total = n + self.source_shift
        if total < 1 or any(s > total for s in self.strands):
            return None
        if self.source_shift and total < 2:
            return None
        return GroupContext(total, self.source)


def _delete_last(word: Word) -> Word:
    """psi on plain words and on the quotient, where the last strand is the distinguished one"""
    if word.context.kind is GroupKind.QUOTIENT:
        return psi_quotient(word)
    return psi(word)


MAPS: Dict[str, MapSpec] = {
    "i": MapSpec("i", GroupKind.PLAIN, embed_parity),
    "p": MapSpec("p", GroupKind.PARITY, project_parity),
    "phi": MapSpec("phi", GroupKind.PARITY, phi),
    "chi": MapSpec("chi", GroupKind.DOTTED, chi, checkable=False),
    "psi": MapSpec("psi", GroupKind.PLAIN, _delete_last, source_shift=1),
    "omega": MapSpec("omega", GroupKind.DOTTED, omega),
    "forget": MapSpec("forget", GroupKind.DOTTED, forget_dots),
}


def _psi_m_spec(m: int) -> MapSpec:
    return MapSpec(f"psi:{m}", GroupKind.PLAIN, lambda w: psi_m(w, m), source_shift=1, strands=(m,))


def _pair_spec(i: int, j: int) -> MapSpec:
    return MapSpec(f"pair:{i}-{j}", GroupKind.PARITY, lambda w: pair_projection(w, i, j), strands=(i, j))


def resolve_map(name: str) -> MapSpec:
    """
    Look up a map by its CLI name.

    Raises:
        UnknownMap: the name is not a known map
    """
    name = name.strip()
    if name in MAPS:
        return MAPS[name]
    head, _, arguments = name.partition(":")
    try:
        if head == "psi" and arguments:
            return _psi_m_spec(int(arguments))
        if head == "pair" and arguments:
            i, j = (int(part) for part in arguments.split("-"))
            return _pair_spec(i, j)
    except ValueError:
        pass
    raise UnknownMap(name)


def parse_chain(text: str) -> List[str]:
    """Comma separated map names, applied left to right"""
    names = [name.strip() for name in text.split(",") if name.strip()]
    if not names:
        raise UnknownMap(text)
    for name in names:
        resolve_map(name)
    return names


def compose(names: Sequence[str], word: Word) -> List[Tuple[str, Word]]:
    """Apply a chain of maps left to right, returning every intermediate image"""
    chain: List[Tuple[str, Word]] = []
    for name in names:
        word = resolve_map(name).apply(word)
        chain.append((name, word))
    return chain


def relation_images(
    spec: MapSpec, relations: Sequence[RewriteRule], context: GroupContext
) -> List[Tuple[RewriteRule, Word, Word]]:
    """Images of both sides of each relation under the map"""
    images = []
    for rule in relations:
        lhs = spec.apply(Word(context, rule.lhs))
        rhs = spec.apply(Word(context, rule.rhs))
        images.append((rule, lhs, rhs))
    logger.debug(f"Mapped {len(images)} relations of {context} through {spec.name}")
    return images


def check_homomorphism(
    name: str,
    n: int,
    oracle: Optional[RewritingOracle] = None,
    max_len: Optional[int] = None,
    max_states: Optional[int] = None,
) -> List[RelationCheck]:
    """
    Map both sides of every defining relation of the source context and ask
    the oracle whether the images agree in the target.

    Raises:
        UnknownMap: unknown map name
        ContextMismatch: the map has no source context at n strands
    """
    spec = resolve_map(name)
    context = spec.source_context(n)
    if context is None or not spec.checkable:
        raise ContextMismatch(f"a source context for {spec.name}", f"n={n}")
    oracle = oracle or RewritingOracle()

    checks: List[RelationCheck] = []
    for rule, lhs, rhs in relation_images(spec, defining_relations(context), context):
        bound = None if max_len is None else max(max_len, len(lhs), len(rhs))
        verdict = oracle.bounded_equiv(lhs, rhs, bound, max_states)
        checks.append(RelationCheck(rule, lhs, rhs, verdict))

    failed = sum(1 for check in checks if not check.verdict.is_equivalent)
    logger.info(f"Checked {len(checks)} relations of {context} through {spec.name}: {failed} not confirmed")
    return checks
