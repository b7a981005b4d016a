"""Argumentation graphs and the canonical ordering shared by every solver.

Argument ids are opaque: ints (the usual case, ordinals from a dialogue) or
strings (names read from APX files). Ints sort numerically before strings,
strings sort lexicographically.
"""

from __future__ import annotations

from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, PrivateAttr

from argaudit.policy.models import Atom

ArgId = int | str
Extension = tuple[ArgId, ...]


def id_key(arg_id: ArgId) -> tuple[int, int | str]:
    return (0, arg_id) if isinstance(arg_id, int) else (1, arg_id)


def canonical_extension(members: Iterable[ArgId]) -> Extension:
    return tuple(sorted(set(members), key=id_key))


def canonical_extensions(extensions: Iterable[Iterable[ArgId]]) -> list[Extension]:
    unique = {canonical_extension(members) for members in extensions}
    return sorted(unique, key=lambda ext: [id_key(a) for a in ext])


class ArgGraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    arg_ids: tuple[ArgId, ...] = ()
    attack_pairs: frozenset[tuple[ArgId, ArgId]] = frozenset()
    conclusion_of: dict[ArgId, Atom] = {}
    move_index_of: dict[ArgId, int] = {}

    _attackers: dict[ArgId, tuple[ArgId, ...]] = PrivateAttr(default_factory=dict)
    _targets: dict[ArgId, tuple[ArgId, ...]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        attackers: dict[ArgId, list[ArgId]] = {a: [] for a in self.arg_ids}
        targets: dict[ArgId, list[ArgId]] = {a: [] for a in self.arg_ids}
        if len(attackers) != len(self.arg_ids):
            raise ValueError("argument ids must be distinct")
        for attacker, target in self.attack_pairs:
            if attacker not in targets or target not in attackers:
                raise ValueError(f"attack ({attacker}, {target}) names an undeclared argument")
            attackers[target].append(attacker)
            targets[attacker].append(target)
        self._attackers = {a: tuple(sorted(v, key=id_key)) for a, v in attackers.items()}
        self._targets = {a: tuple(sorted(v, key=id_key)) for a, v in targets.items()}

    @classmethod
    def build(cls, arg_ids: Iterable[ArgId], attack_pairs: Iterable[tuple[ArgId, ArgId]] = (), **metadata) -> ArgGraph:
        return cls(
            arg_ids=tuple(sorted(set(arg_ids), key=id_key)),
            attack_pairs=frozenset(attack_pairs),
            **metadata,
        )

    def __len__(self) -> int:
        return len(self.arg_ids)

    def attackers_of(self, arg_id: ArgId) -> tuple[ArgId, ...]:
        return self._attackers[arg_id]

    def targets_of(self, arg_id: ArgId) -> tuple[ArgId, ...]:
        return self._targets[arg_id]

    def sorted_attacks(self) -> list[tuple[ArgId, ArgId]]:
        return sorted(self.attack_pairs, key=lambda pair: (id_key(pair[0]), id_key(pair[1])))

    def is_symmetric(self) -> bool:
        return all((target, attacker) in self.attack_pairs for attacker, target in self.attack_pairs)
