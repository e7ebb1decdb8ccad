"""Four-layer cultural context schema, compiled into pipeline actions.

A profile is operator-authored YAML: layers -> dimension -> free-text
payload. Validation is strict (closed dimension set, fixed layer
membership); compilation maps each configured dimension to the concrete
things the pipeline can do with it.
"""

from __future__ import annotations

import difflib
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Union

import yaml

LAYERS = ("Societal", "Regional", "Community", "Individual")

# dimension -> layer; the closed schema (21 dimensions across 4 layers).
DIMENSION_LAYER = {
    "MedicalConsensus": "Societal",
    "LawsAndRegulations": "Societal",
    "SpokenLanguage": "Regional",
    "WrittenScript": "Regional",
    "HealthcareAccess": "Regional",
    "CommunityDynamics": "Community",
    "CommunityBeliefs": "Community",
    "Religion": "Community",
    "CasteAndTribe": "Community",
    "Dialect": "Community",
    "GenderRoles": "Community",
    "Diet": "Community",
    "HouseholdDynamics": "Individual",
    "PrivacyPractices": "Individual",
    "Age": "Individual",
    "IncomeAndOccupation": "Individual",
    "MaritalStatus": "Individual",
    "DigitalLiteracy": "Individual",
    "HealthLiteracy": "Individual",
    "MedicalHistory": "Individual",
    "Disabilities": "Individual",
}

PAYLOAD_MAX_CHARS = 400
_CONTROL_CHARS = re.compile(r"[\x00-\x08\x0b-\x1f\x7f]")


class ProfileError(ValueError):
    pass


class ActionKind(str, Enum):
    KNOWLEDGE_BASE_TAG = "knowledge_base_tag"
    PROMPT_FRAGMENT = "prompt_fragment"
    LEXICON_PACK = "lexicon_pack"
    SERVICE_ROUTING = "service_routing"
    FOLLOWUP_POLICY = "followup_policy"
    MODEL_CHOICE = "model_choice"
    VOICE_OUTPUT = "voice_output"
    GRAMMAR_CORRECTION = "grammar_correction"


@dataclass(frozen=True)
class DimensionSetting:
    dimension: str
    payload: str = ""

    def __post_init__(self):
        if self.dimension not in DIMENSION_LAYER:
            raise ProfileError(f"unknown dimension {self.dimension!r}")


@dataclass
class CulturalProfile:
    layers: dict[str, list[DimensionSetting]] = field(
        default_factory=lambda: {layer: [] for layer in LAYERS}
    )

    def settings(self) -> list[DimensionSetting]:
        out = []
        for layer in LAYERS:
            out.extend(self.layers.get(layer, []))
        return out


@dataclass(frozen=True)
class PipelineAction:
    kind: ActionKind
    layer: str
    dimension: str
    detail: str


def validate_tag(layer: str, dimension: str) -> tuple[str, str]:
    """Check a (layer, dimension) pair against the schema; returns it."""
    if dimension not in DIMENSION_LAYER:
        raise ProfileError(_unknown_dimension_message(dimension))
    expected = DIMENSION_LAYER[dimension]
    if layer != expected:
        raise ProfileError(
            f"dimension {dimension!r} belongs to layer {expected!r}, not {layer!r}"
        )
    return layer, dimension


def _unknown_dimension_message(name: str) -> str:
    close = difflib.get_close_matches(name, DIMENSION_LAYER.keys(), n=1, cutoff=0.4)
    hint = f"; did you mean {close[0]!r}?" if close else ""
    return f"unknown dimension {name!r}{hint}"


def _sanitize_payload(raw: object) -> str:
    text = _CONTROL_CHARS.sub("", str(raw or "")).strip()
    return text[:PAYLOAD_MAX_CHARS]


def validate_profile(raw_config: dict) -> CulturalProfile:
    """Build a profile from parsed YAML; unknown names are hard errors."""
    if raw_config is None:
        raw_config = {}
    if not isinstance(raw_config, dict):
        raise ProfileError("profile must be a mapping of layers")
    profile = CulturalProfile()
    for layer, dims in raw_config.items():
        if layer not in LAYERS:
            close = difflib.get_close_matches(str(layer), LAYERS, n=1, cutoff=0.4)
            hint = f"; did you mean {close[0]!r}?" if close else ""
            raise ProfileError(f"unknown layer {layer!r}{hint}")
        if dims is None:
            continue
        if not isinstance(dims, dict):
            raise ProfileError(f"layer {layer!r} must map dimensions to payloads")
        for dimension, payload in dims.items():
            validate_tag(layer, str(dimension))
            profile.layers[layer].append(
                DimensionSetting(str(dimension), _sanitize_payload(payload))
            )
    return profile


def load_profile(path: Union[str, Path]) -> CulturalProfile:
    raw = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    return validate_profile(raw)


def _fragment(dimension: str, payload: str) -> str:
    """Prompt fragment text per dimension; payload is injected verbatim."""
    base = {
        "MedicalConsensus": (
            "Only give advice that follows current evidence-based medical consensus."
        ),
        "LawsAndRegulations": (
            "State the locally applicable law when the question touches legal "
            "matters such as the age of consent or marriage."
        ),
        "CommunityDynamics": (
            "Acknowledge the role of neighbours and community advice; encourage "
            "consulting a community leader while prioritizing verified medical "
            "information."
        ),
        "CommunityBeliefs": (
            "If a mentioned practice is benign, keep a neutral tone and do not "
            "question it. If it is harmful, present medically accurate evidence "
            "without denigrating the practice. Always acknowledge the concern and "
            "encourage talking to a religious/community leader and a doctor."
        ),
        "Religion": (
            "Recognize religious and communal beliefs. If a recommendation "
            "conflicts with the user's beliefs, offer alternatives and "
            "encourage talking to a religious/community leader as well as a doctor."
        ),
        "CasteAndTribe": (
            "Recognize religious and communal beliefs. If a recommendation "
            "conflicts with the user's beliefs, offer alternatives and "
            "encourage talking to a religious/community leader as well as a doctor."
        ),
        "GenderRoles": (
            "Acknowledge dominant gender roles and that they can change. Family "
            "planning is a shared responsibility of both partners, never the "
            "woman's alone. Center women's agency and offer strategies to "
            "negotiate power over one's own health and relationships."
        ),
        "PrivacyPractices": (
            "Write in a respectful, formal tone, like a medical professional; the "
            "device may be shared with family members."
        ),
        "Age": (
            "Ask a follow-up question about age when it is relevant to a symptom, "
            "and factor age into the answer when the user mentions it."
        ),
        "MedicalHistory": (
            "Ask a follow-up question about relevant medical history, and use any "
            "history the user shares."
        ),
    }
    text = base.get(dimension, "")
    if payload:
        text = f"{text} Context: {payload}".strip()
    return text


# dimension -> action kinds it compiles to, per the shipped design table.
ACTION_TABLE: dict[str, tuple[ActionKind, ...]] = {
    "MedicalConsensus": (ActionKind.KNOWLEDGE_BASE_TAG, ActionKind.PROMPT_FRAGMENT),
    "LawsAndRegulations": (ActionKind.KNOWLEDGE_BASE_TAG, ActionKind.PROMPT_FRAGMENT),
    "SpokenLanguage": (ActionKind.MODEL_CHOICE,),
    "WrittenScript": (ActionKind.MODEL_CHOICE,),
    "HealthcareAccess": (ActionKind.SERVICE_ROUTING,),
    "CommunityDynamics": (ActionKind.KNOWLEDGE_BASE_TAG, ActionKind.PROMPT_FRAGMENT),
    "CommunityBeliefs": (ActionKind.KNOWLEDGE_BASE_TAG, ActionKind.PROMPT_FRAGMENT),
    "Religion": (ActionKind.KNOWLEDGE_BASE_TAG, ActionKind.PROMPT_FRAGMENT),
    "CasteAndTribe": (ActionKind.KNOWLEDGE_BASE_TAG, ActionKind.PROMPT_FRAGMENT),
    "Dialect": (ActionKind.LEXICON_PACK,),
    "GenderRoles": (ActionKind.PROMPT_FRAGMENT,),
    "Diet": (ActionKind.KNOWLEDGE_BASE_TAG,),
    "HouseholdDynamics": (ActionKind.KNOWLEDGE_BASE_TAG,),
    "PrivacyPractices": (ActionKind.PROMPT_FRAGMENT,),
    "Age": (ActionKind.FOLLOWUP_POLICY, ActionKind.PROMPT_FRAGMENT),
    "IncomeAndOccupation": (ActionKind.SERVICE_ROUTING,),
    "MaritalStatus": (ActionKind.KNOWLEDGE_BASE_TAG,),
    "DigitalLiteracy": (ActionKind.GRAMMAR_CORRECTION, ActionKind.VOICE_OUTPUT),
    "HealthLiteracy": (ActionKind.LEXICON_PACK, ActionKind.KNOWLEDGE_BASE_TAG),
    "MedicalHistory": (ActionKind.FOLLOWUP_POLICY, ActionKind.PROMPT_FRAGMENT),
    "Disabilities": (ActionKind.SERVICE_ROUTING,),
}


def _action_detail(kind: ActionKind, dimension: str, payload: str) -> str:
    if kind is ActionKind.PROMPT_FRAGMENT:
        return _fragment(dimension, payload)
    if kind is ActionKind.KNOWLEDGE_BASE_TAG:
        return payload or f"corpus must cover {dimension}"
    if kind is ActionKind.SERVICE_ROUTING:
        return (
            "offer teleconsultation or refer to free or local services"
            + (f" ({payload})" if payload else "")
        )
    if kind is ActionKind.LEXICON_PACK:
        return payload or "load the local-terms lexicon pack"
    if kind is ActionKind.FOLLOWUP_POLICY:
        return f"ask about {dimension.lower()} when relevant to a symptom"
    if kind is ActionKind.MODEL_CHOICE:
        return payload or "pick a model/translation service covering the language"
    if kind is ActionKind.VOICE_OUTPUT:
        return "offer read-aloud audio for low-literacy users"
    if kind is ActionKind.GRAMMAR_CORRECTION:
        return "correct spelling/grammar before interpreting the query"
    raise AssertionError(kind)


# Actions present regardless of profile: the pipeline always corrects
# grammar and always allows one follow-up question per turn.
DEFAULT_ACTIONS = (
    PipelineAction(
        ActionKind.GRAMMAR_CORRECTION,
        "Individual",
        "DigitalLiteracy",
        "correct spelling/grammar before interpreting the query",
    ),
    PipelineAction(
        ActionKind.FOLLOWUP_POLICY,
        "Individual",
        "Age",
        "at most one follow-up question per turn",
    ),
)


def compile_actions(profile: CulturalProfile) -> list[PipelineAction]:
    """Deterministic dimension -> action expansion; defaults come first."""
    actions = list(DEFAULT_ACTIONS)
    for setting in profile.settings():
        layer = DIMENSION_LAYER[setting.dimension]
        for kind in ACTION_TABLE[setting.dimension]:
            actions.append(
                PipelineAction(
                    kind=kind,
                    layer=layer,
                    dimension=setting.dimension,
                    detail=_action_detail(kind, setting.dimension, setting.payload),
                )
            )
    return actions


def prompt_fragments(actions: Iterable[PipelineAction]) -> list[str]:
    seen = set()
    out = []
    for action in actions:
        if action.kind is ActionKind.PROMPT_FRAGMENT and action.detail:
            if action.detail not in seen:
                seen.add(action.detail)
                out.append(action.detail)
    return out


def knowledge_tags(actions: Iterable[PipelineAction]) -> list[tuple[str, str]]:
    return [
        (a.layer, a.dimension)
        for a in actions
        if a.kind is ActionKind.KNOWLEDGE_BASE_TAG
    ]


def lint_report(
    profile: CulturalProfile, corpus_tags: Optional[set[tuple[str, str]]] = None
) -> str:
    """Human-readable compiled action plan, for the profile lint command."""
    actions = compile_actions(profile)
    lines = ["compiled action plan:"]
    for action in actions:
        lines.append(
            f"  [{action.layer}/{action.dimension}] {action.kind.value}: {action.detail}"
        )
    if corpus_tags is not None:
        missing = [t for t in knowledge_tags(actions) if t not in corpus_tags]
        for layer, dimension in missing:
            lines.append(
                f"  WARNING: corpus has no chunks tagged ({layer}, {dimension})"
            )
    return "\n".join(lines)
