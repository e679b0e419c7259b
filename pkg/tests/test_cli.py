import json
from pathlib import Path

import jsonschema

from basekit import cli, dump_group_text, catalog

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestExitCodes:
    def test_parse_error_is_3(self, capsys):
        code, _ = run_cli(capsys, "base-size", "--group", "nosuch(3)", "--subgroup", "sym(2)")
        assert code == 3

    def test_hypothesis_error_is_1(self, capsys):
        code, _ = run_cli(capsys, "partition", "--group", "alt(5)")
        assert code == 1

    def test_budget_error_is_2(self, capsys):
        code, _ = run_cli(
            capsys, "reg-count", "--group", "sym(5)", "--subgroup", "young(4,1)",
            "--k", "6", "--scan-budget", "10",
        )
        assert code == 2

    def test_success_is_0(self, capsys):
        code, _ = run_cli(capsys, "base-size", "--group", "sym(5)", "--subgroup", "sym(4)")
        assert code == 0


class TestReports:
    def test_base_size_json_schema(self, capsys):
        code, out = run_cli(
            capsys, "base-size", "--group", "sym(5)", "--subgroup", "young(4,1)",
            "--output", "json",
        )
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("regular_orbit_report.schema.json"))
        assert payload["base_size"] == 4
        assert payload["representatives"] == [[1, 2, 3, 4]]

    def test_reg_count_json_schema(self, capsys):
        code, out = run_cli(
            capsys, "reg-count", "--group", "sym(5)", "--subgroup", "young(4,1)",
            "--k", "4", "--output", "json",
        )
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("regular_orbit_report.schema.json"))
        assert payload["reg_count"] == 1

    def test_intersections_json_schema(self, capsys):
        code, out = run_cli(
            capsys, "intersections", "--group", "sym(5)", "--subgroup", "young(4,1)",
            "--k", "4", "--output", "json",
        )
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("intersections.schema.json"))
        assert payload["found"] is True

    def test_partition_json_schema(self, capsys):
        code, out = run_cli(capsys, "partition", "--group", "cyc(4)", "--output", "json")
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("partition.schema.json"))
        assert payload["cell_count"] <= 5

    def test_random_base_json_schema(self, capsys):
        code, out = run_cli(
            capsys, "random-base", "--group", "sym(4)", "--subgroup", "young(3,1)",
            "--k", "6", "--trials", "500", "--seed", "9", "--output", "json",
        )
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("sample_run.schema.json"))
        assert payload["trials"] == 500

    def test_wreath_lift_json_schema(self, capsys):
        code, out = run_cli(
            capsys, "wreath-lift", "--group", "sym(4)", "--subgroup", "young(3,1)",
            "--top", "sym(2)", "--k", "6", "--lifts", "5", "--output", "json",
        )
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("wreath_lift.schema.json"))
        assert len(payload["lifts"]) == 5
        assert payload["wreath_order"] == 1152

    def test_text_and_json_agree(self, capsys):
        _, text = run_cli(capsys, "reg-count", "--group", "sym(5)",
                          "--subgroup", "young(4,1)", "--k", "4")
        _, js = run_cli(capsys, "reg-count", "--group", "sym(5)",
                        "--subgroup", "young(4,1)", "--k", "4", "--output", "json")
        payload = json.loads(js)
        text_map = dict(line.split(": ", 1) for line in text.strip().splitlines())
        assert int(text_map["reg_count"]) == payload["reg_count"]
        assert int(text_map["k"]) == payload["k"]

    def test_determinism_modulo_timing(self, capsys):
        args = ["reg-count", "--group", "sym(5)", "--subgroup", "young(4,1)",
                "--k", "4", "--output", "json"]
        _, out1 = run_cli(capsys, *args)
        _, out2 = run_cli(capsys, *args)
        p1, p2 = json.loads(out1), json.loads(out2)
        p1["elapsed_ms"] = p2["elapsed_ms"] = 0
        assert json.dumps(p1) == json.dumps(p2)

    def test_analyze_degenerate(self, capsys):
        code, out = run_cli(capsys, "analyze", "--group", "sym(4)", "--subgroup", "sym(4)",
                            "--output", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["trivial_action"] is True
        assert payload["base_size"] == 0
        assert payload["index"] == 1

    def test_analyze_point_stabilizer_action(self, capsys):
        code, out = run_cli(capsys, "analyze", "--group", "sym(5)",
                            "--subgroup", "young(4,1)", "--output", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["group_order"] == 120
        assert payload["index"] == 5
        assert payload["core_order"] == 1
        assert payload["subgroup_maximal_solvable"] is True
        assert payload["index_lower_bound"] == 3
        assert payload["base_size"] == 4
        assert payload["reg_count_at_4"] == 1
        assert payload["intersection_witnesses"] is not None

    def test_verify_examples_passes(self, capsys):
        code, out = run_cli(capsys, "verify-examples")
        assert code == 0
        lines = [l for l in out.splitlines() if l.startswith("[")]
        assert len(lines) == 10
        assert all(l.startswith("[PASS]") for l in lines)


class TestIngestion:
    def test_group_file(self, tmp_path, capsys):
        f = tmp_path / "g.grp"
        f.write_text(dump_group_text(catalog("sym(5)")))
        code, out = run_cli(capsys, "base-size", "--group", str(f),
                            "--subgroup", "young(4,1)", "--output", "json")
        assert code == 0
        assert json.loads(out)["base_size"] == 4

    def test_subgroup_degree_extension(self, capsys):
        # sym(4) on four points embeds into sym(5) fixing the last point
        code, out = run_cli(capsys, "base-size", "--group", "sym(5)",
                            "--subgroup", "sym(4)", "--output", "json")
        assert code == 0
        assert json.loads(out)["base_size"] == 4

    def test_threads_flag(self, capsys):
        code, out = run_cli(capsys, "reg-count", "--group", "sym(5)",
                            "--subgroup", "young(4,1)", "--k", "4",
                            "--threads", "2", "--output", "json")
        assert code == 0
        assert json.loads(out)["reg_count"] == 1
