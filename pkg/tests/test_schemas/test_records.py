"""Tests for JSON record schemas."""

import pytest
from pydantic import ValidationError

from app.core.exceptions import NotInvolution
from app.schemas.families import FamilyRecordModel
from app.schemas.records import MapRecord, SubgroupRecord
from app.services.dessin import GraphDatum
from app.services.families import classify_special
from app.services.maps import canonical_code
from app.services.subgroups import make_subgroup_rep


class TestMapRecord:
    def test_round_trip(self, star_a):
        record = MapRecord.from_graph(star_a)
        assert record.darts == 6
        assert set(record.marks.values()) == {"A2"}
        back = MapRecord.model_validate_json(record.model_dump_json()).to_graph()
        assert canonical_code(back.map, back.marking) == canonical_code(star_a.map, star_a.marking)

    def test_mark_keys_must_be_darts(self):
        with pytest.raises(ValidationError):
            MapRecord(darts=2, sigma=[0, 1], alpha=[1, 0], marks={"end": "A2"})

    def test_unknown_mark(self):
        with pytest.raises(ValidationError):
            MapRecord(darts=2, sigma=[0, 1], alpha=[1, 0], marks={"0": "C3"})

    def test_to_graph_revalidates(self):
        record = MapRecord(darts=4, sigma=[1, 2, 0, 3], alpha=[1, 2, 3, 0])
        with pytest.raises(NotInvolution):
            record.to_graph()


class TestSubgroupRecord:
    def test_round_trip(self):
        rep = make_subgroup_rep(3, (1, 2, 0), (1, 0, 2))
        record = SubgroupRecord.from_rep(rep)
        assert record.model_dump() == {"n": 3, "sigma3": [1, 2, 0], "sigma2": [1, 0, 2]}
        assert record.to_rep().code == rep.code


class TestFamilyRecordModel:
    def test_from_record(self):
        rec = classify_special(1, GraphDatum(0, 2, 0))[0]
        model = FamilyRecordModel.from_record(rec)
        assert model.gd == "[2A2]"
        assert model.degree == 6
        assert model.rd == "[(3,3)_A,(3,3)_A,(2),(2)]"
        assert model.special and model.generic
        assert model.constellation is not None and len(model.constellation) == 4
