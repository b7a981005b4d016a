import pytest

from argaudit.af.semantics import Semantics
from argaudit.arguments.topics import InputClassSpec, Topic
from argaudit.errors import MissingBindingError, MissingDescriptorGroupError
from argaudit.investigation.acceptance import Acceptance, TopicStatus, classify_topic
from argaudit.investigation.agents import DescriptorMode, InvestigatorAgent
from argaudit.investigation.interrogation import (
    BeliefMode,
    TopicOutcome,
    VerdictValue,
    argues_status,
    decide,
    interrogate,
)
from argaudit.investigation.nonmonotonic import check_nonmonotonicity
from argaudit.investigation.topics import generate_topics
from argaudit.policy import parse_policy
from argaudit.recommender.describe import HIGH_VARIETY, LOW_VARIETY, MEDIUM_VARIETY

WOMAN = "woman(director(x))"
INDEPENDENT = "independent(type(x))"
ACTION = "action(genre(x))"

GROUP_LABELS = [
    f"{WOMAN} / variety",
    f"{INDEPENDENT} / variety",
    f"{ACTION} / variety",
    f"{WOMAN} & {INDEPENDENT} / variety",
    f"{WOMAN} & {ACTION} / variety",
    f"{INDEPENDENT} & {ACTION} / variety",
    f"{WOMAN} & {INDEPENDENT} & {ACTION} / variety",
]

# (status, arguments, extensions, arguments in every extension) under stable semantics.
STABLE_OUTCOMES = [
    (Acceptance.CREDULOUS, 10, 12, (5, 7, 10)),
    (Acceptance.REJECTED, 7, 2, (2, 4, 5, 6, 7)),
    (Acceptance.SCEPTICAL, 12, 8, (5, 6, 7, 9, 10, 12)),
    (Acceptance.REJECTED, 5, 2, (2, 4, 5)),
    (Acceptance.REJECTED, 7, 4, (5, 6, 7)),
    (Acceptance.REJECTED, 4, 1, (1, 2, 3, 4)),
    (Acceptance.REJECTED, 2, 1, (1, 2)),
]


def investigator_for(source, audit_config, **strategy_changes):
    strategy = audit_config.topic_strategy().model_copy(update=strategy_changes)
    return InvestigatorAgent(policy=parse_policy(source), strategy=strategy)


def topic(*descriptors, label="t", predicates=()):
    return Topic(input_class=InputClassSpec(predicates=predicates), descriptors=frozenset(descriptors), label=label)


def test_topics_for_running_example(topics):
    assert [t.label for t in topics] == GROUP_LABELS
    assert all(t.descriptors == {HIGH_VARIETY, MEDIUM_VARIETY, LOW_VARIETY} for t in topics)
    assert [len(t.input_class.predicates) for t in topics] == [1, 1, 1, 2, 2, 2, 3]


def test_topics_for_two_clauses(audit_config):
    source = (
        f"highVariety(x) <- {WOMAN}, {INDEPENDENT}, {ACTION}.\n"
        f"lowVariety(x) <- {WOMAN}, {INDEPENDENT}.\n"
    )
    labels = [t.label for t in generate_topics(investigator_for(source, audit_config))]
    assert len(labels) == 10
    assert labels[7:] == [f"{WOMAN} / variety", f"{INDEPENDENT} / variety", f"{WOMAN} & {INDEPENDENT} / variety"]


def test_topics_for_fact_and_empty_policy(audit_config):
    [only] = generate_topics(investigator_for("highVariety(x).", audit_config))
    assert only.label == "* / variety"
    assert str(only.input_class) == "*"
    assert generate_topics(investigator_for("", audit_config)) == []


def test_topics_head_only(audit_config):
    investigator = investigator_for(
        f"highVariety(x) <- {WOMAN}, {ACTION}.", audit_config, descriptor_mode=DescriptorMode.HEAD_ONLY
    )
    topics = generate_topics(investigator)
    assert [t.label for t in topics] == [
        f"{WOMAN} / highVariety(x)",
        f"{ACTION} / highVariety(x)",
        f"{WOMAN} & {ACTION} / highVariety(x)",
    ]
    assert all(t.descriptors == {HIGH_VARIETY} for t in topics)


def test_topics_need_bindings_and_groups(audit_config):
    with pytest.raises(MissingBindingError, match="budget"):
        generate_topics(investigator_for(f"highVariety(x) <- {WOMAN}, low(budget(x)).", audit_config))
    with pytest.raises(MissingDescriptorGroupError, match="popular"):
        generate_topics(investigator_for(f"popular(x) <- {WOMAN}.", audit_config))


@pytest.mark.parametrize(
    "descriptors, expected",
    [
        ({HIGH_VARIETY}, Acceptance.SCEPTICAL),
        ({HIGH_VARIETY, MEDIUM_VARIETY}, Acceptance.CREDULOUS),
        ({HIGH_VARIETY, MEDIUM_VARIETY, LOW_VARIETY}, Acceptance.CREDULOUS),
    ],
)
def test_classify_topic(descriptors, expected):
    conclusion_of = {1: HIGH_VARIETY, 2: MEDIUM_VARIETY, 3: LOW_VARIETY}
    status = classify_topic([(1, 2), (1, 3)], conclusion_of, topic(*descriptors))
    assert status.value is expected
    assert status.sceptical_arguments == (1,)
    assert status.credulous_arguments == (1, 2, 3)
    assert status.sceptical_conclusions == {HIGH_VARIETY}


def test_classify_topic_rejections():
    assert classify_topic([], {}, topic(HIGH_VARIETY)) == TopicStatus(value=Acceptance.REJECTED)
    status = classify_topic([()], {}, topic(HIGH_VARIETY))
    assert status.value is Acceptance.REJECTED
    assert not status.credulous_holds(topic(HIGH_VARIETY))
    assert classify_topic([(1,)], {1: LOW_VARIETY}, topic(HIGH_VARIETY)).value is Acceptance.REJECTED


def test_interrogate_stable(investigator, suspect, audit_config):
    verdict = interrogate(investigator, suspect, Semantics.STABLE, audit_config.similarity)
    assert verdict.value is VerdictValue.MIXED
    assert verdict.semantics is Semantics.STABLE
    assert [t.label for t, _ in verdict.per_topic] == GROUP_LABELS
    observed = [
        (o.status.value, len(o.graph), len(o.extensions), o.status.sceptical_arguments) for o in verdict.outcomes
    ]
    assert observed == STABLE_OUTCOMES
    assert all(consistent for _, consistent in verdict.consistency)
    assert all(o.coverage == 1.0 for o in verdict.outcomes)


def test_interrogate_grounded(investigator, suspect):
    verdict = interrogate(investigator, suspect, "grounded")
    assert verdict.value is VerdictValue.MIXED
    statuses = [status.value for _, status in verdict.per_topic]
    assert statuses[0] is Acceptance.REJECTED
    assert statuses[2] is Acceptance.SCEPTICAL
    assert verdict.outcomes[0].extensions == [(5, 7, 10)]


def test_interrogate_in_parallel_matches_serial(investigator, suspect):
    serial = interrogate(investigator, suspect, Semantics.STABLE)
    parallel = interrogate(investigator, suspect, Semantics.STABLE, workers=4)
    assert parallel.value is serial.value
    assert [o.topic for o in parallel.outcomes] == [o.topic for o in serial.outcomes]
    assert [o.extensions for o in parallel.outcomes] == [o.extensions for o in serial.outcomes]


def test_interrogate_head_only(policy, audit_config, suspect):
    # Only highVariety(x) survives, and movie 1 (high for both raters) matches every topic.
    strategy = audit_config.topic_strategy().model_copy(update={"descriptor_mode": DescriptorMode.HEAD_ONLY})
    investigator = InvestigatorAgent(policy=policy, strategy=strategy)
    verdict = interrogate(investigator, suspect, Semantics.STABLE)
    assert verdict.value is VerdictValue.STRONG_BELIEF
    assert len(verdict.outcomes) == 7
    for outcome_ in verdict.outcomes:
        assert outcome_.status.value is Acceptance.SCEPTICAL
        assert outcome_.graph.attack_pairs == frozenset()
        assert len(outcome_.extensions) == 1
    report = check_nonmonotonicity([(t, s.value) for t, s in verdict.per_topic])
    assert report.descriptor_mode == ()
    assert report.input_refinement_mode == ()
    assert not report.non_monotonic


def test_interrogate_without_topics(audit_config, suspect):
    verdict = interrogate(investigator_for("", audit_config), suspect, Semantics.STABLE)
    assert verdict.value is VerdictValue.STRONG_DISBELIEF
    assert verdict.outcomes == ()


@pytest.mark.parametrize(
    "index, expected",
    [(0, BeliefMode.CREDULOUS), (1, BeliefMode.EMPTY), (2, BeliefMode.SCEPTICAL)],
)
def test_argues_status(suspect, investigator, topics, index, expected):
    assert argues_status(suspect, investigator, topics[index], Semantics.STABLE) is expected


def outcome(value, consistent=True):
    return TopicOutcome(
        topic=None,
        dialogue=None,
        graph=None,
        extensions=[],
        status=TopicStatus(value=value),
        consistent=consistent,
        coverage=1.0,
    )


S, C, R = Acceptance.SCEPTICAL, Acceptance.CREDULOUS, Acceptance.REJECTED


@pytest.mark.parametrize(
    "outcomes, expected",
    [
        ([], VerdictValue.STRONG_DISBELIEF),
        ([outcome(S), outcome(S)], VerdictValue.STRONG_BELIEF),
        ([outcome(S), outcome(C)], VerdictValue.CREDULOUS_BELIEF),
        ([outcome(C)], VerdictValue.CREDULOUS_BELIEF),
        ([outcome(R), outcome(R)], VerdictValue.STRONG_DISBELIEF),
        ([outcome(S), outcome(R)], VerdictValue.MIXED),
        ([outcome(S), outcome(S, consistent=False)], VerdictValue.MIXED),
        ([outcome(R, consistent=False)], VerdictValue.MIXED),
    ],
)
def test_decide(outcomes, expected):
    assert decide(outcomes) is expected


def test_nonmonotonicity_by_descriptors():
    narrow = topic(HIGH_VARIETY, label="narrow")
    wide = topic(HIGH_VARIETY, LOW_VARIETY, label="wide")
    report = check_nonmonotonicity([(narrow, S), (wide, R)])
    assert report.non_monotonic
    assert [(w.coarser, w.finer) for w in report.descriptor_mode] == [("narrow", "wide")]
    assert report.input_refinement_mode == ()
    assert report.to_json()["descriptor_mode"] == [
        {"coarser": "narrow", "finer": "wide", "coarser_status": "sceptical", "finer_status": "rejected"}
    ]


def test_nonmonotonicity_needs_status_change():
    narrow = topic(HIGH_VARIETY, label="narrow")
    wide = topic(HIGH_VARIETY, LOW_VARIETY, label="wide")
    report = check_nonmonotonicity([(narrow, C), (wide, C)])
    assert not report.non_monotonic
    assert report.to_json() == {"non_monotonic": False, "descriptor_mode": [], "input_refinement_mode": []}


def test_nonmonotonicity_by_input_refinement(topics):
    report = check_nonmonotonicity([(topics[0], C), (topics[3], R), (topics[1], R)])
    assert [(w.coarser, w.finer) for w in report.input_refinement_mode] == [(GROUP_LABELS[0], GROUP_LABELS[3])]
    assert report.descriptor_mode == ()
    assert not report.non_monotonic
