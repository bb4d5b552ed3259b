import pytest

from textsim.config import (KNOWN_KINDS, MethodSpec, RunConfig, parse_config,
                            validate_assets)
from textsim.errors import ConfigError, MissingAssetError


def write(tmp_path, text, name="run.conf"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


# --- MethodSpec / RunConfig validation -----------------------------------

def test_method_spec_kinds():
    assert set(KNOWN_KINDS) == {"string", "lin+string", "pmi+string",
                                "lsa+string", "tfidf", "embedding"}
    MethodSpec(name="s", kind="string")
    with pytest.raises(ValueError, match="unknown method kind"):
        MethodSpec(name="x", kind="bogus")


def test_method_spec_required_assets():
    with pytest.raises(ValueError, match="taxonomy"):
        MethodSpec(name="l", kind="lin+string")
    with pytest.raises(ValueError, match="corpus"):
        MethodSpec(name="p", kind="pmi+string")
    with pytest.raises(ValueError, match="corpus"):
        MethodSpec(name="l", kind="lsa+string")
    with pytest.raises(ValueError, match="embeddings"):
        MethodSpec(name="e", kind="embedding")
    MethodSpec(name="t", kind="tfidf")  # corpus optional: fits on the data


def test_method_spec_ranges():
    with pytest.raises(ValueError, match="w_string"):
        MethodSpec(name="s", kind="string", w_string=1.5)
    with pytest.raises(ValueError, match="window"):
        MethodSpec(name="s", kind="string", window=0)
    with pytest.raises(ValueError, match="rank"):
        MethodSpec(name="s", kind="string", rank=0)


def test_run_config_validation():
    m = MethodSpec(name="s", kind="string")
    with pytest.raises(ValueError, match="at least one"):
        RunConfig(methods=())
    with pytest.raises(ValueError, match="unique"):
        RunConfig(methods=(m, m))


# --- parsing ---------------------------------------------------------------

def test_parse_minimal(tmp_path):
    p = write(tmp_path, "[method:string]\n")
    cfg = parse_config(p)
    assert len(cfg.methods) == 1
    assert cfg.methods[0].name == "string"
    assert cfg.methods[0].kind == "string"  # kind defaults to section name
    assert cfg.methods[0].w_string == 1.0  # pure string method default
    assert cfg.seed == 0
    assert cfg.mrpc is None


def test_parse_full(tmp_path):
    (tmp_path / "tax.tsv").write_text("root\t-\t-\t1\n")
    p = write(tmp_path, """
# benchmark run
seed = 7
mrpc = data/mrpc.tsv   # inline comment
[method:lin]
kind = lin+string
taxonomy = tax.tsv
w_string = 0.3
[method:pmi]
kind = pmi+string
corpus = docs.txt
window = 3
""")
    cfg = parse_config(p)
    assert cfg.seed == 7
    assert cfg.mrpc == str(tmp_path / "data/mrpc.tsv")
    lin, pmi = cfg.methods
    assert lin.name == "lin" and lin.kind == "lin+string"
    assert lin.taxonomy == str(tmp_path / "tax.tsv")
    assert lin.w_string == 0.3
    assert pmi.window == 3
    assert pmi.w_string == 0.5  # knowledge-bearing kinds split evenly


def test_parse_missing_file():
    with pytest.raises(MissingAssetError):
        parse_config("/nonexistent/run.conf")


@pytest.mark.parametrize("text,match,line", [
    ("seed = x\n[method:string]\n", "integer", 1),
    ("bogus = 1\n[method:string]\n", "unknown top-level key", 1),
    ("[method:string]\nbogus = 1\n", "unknown method key", 2),
    ("[method:string\n", "unterminated", 1),
    ("[task:x]\n", "unknown section", 1),
    ("[method:]\n", "empty method name", 1),
    ("[method:a]\n[method:a]\n", "duplicate method section", 2),
    ("seed = 1\nseed = 2\n[method:string]\n", "duplicate key", 2),
    ("[method:string]\nnot a statement\n", "expected 'key = value'", 2),
    ("[method:string]\n= 3\n", "missing key", 2),
    ("[method:string]\nw_string = big\n", "number", 2),
    ("seed = 1\n", "no \\[method:NAME\\] sections", 1),
    ("[method:x]\nkind = bogus\n", "unknown method kind", 1),
    ("[method:lin+string]\n", "requires 'taxonomy'", 1),
])
def test_parse_errors_carry_line_numbers(tmp_path, text, match, line):
    p = write(tmp_path, text)
    with pytest.raises(ConfigError, match=match) as exc:
        parse_config(p)
    assert exc.value.line == line


def test_config_error_is_value_error(tmp_path):
    p = write(tmp_path, "seed = x\n[method:string]\n")
    with pytest.raises(ValueError):
        parse_config(p)


def test_relative_paths_resolve_against_config_dir(tmp_path):
    sub = tmp_path / "cfgdir"
    sub.mkdir()
    p = write(sub, "mrpc = ../data.tsv\n[method:string]\n")
    cfg = parse_config(p)
    assert cfg.mrpc == str(sub / "../data.tsv")


def test_validate_assets(tmp_path):
    tax = tmp_path / "tax.tsv"
    tax.write_text("root\t-\t-\t1\n")
    p = write(tmp_path, "[method:lin]\nkind = lin+string\ntaxonomy = tax.tsv\n")
    cfg = parse_config(p)
    validate_assets(cfg)  # file exists: passes
    tax.unlink()
    with pytest.raises(MissingAssetError, match="tax.tsv"):
        validate_assets(cfg)
