from aqdfigs.cli import main


def test_plot_subcommand_renders(preset_dir, tmp_path, capsys):
    out = tmp_path / "fig3.png"
    code = main(["plot", "fig3",
                 "--csv-dir", str(preset_dir), "--out", str(out)])
    assert code == 0
    assert str(out) in capsys.readouterr().out
    assert out.is_file()


def test_missing_inputs_give_exit_one(tmp_path, capsys):
    code = main(["plot", "fig2",
                 "--csv-dir", str(tmp_path), "--out", str(tmp_path / "x.png")])
    assert code == 1
    err = capsys.readouterr().err
    assert "MissingInputError" in err
    assert "fig2a_1" in err


def test_plot_over_real_simulator_output(real_fig4_dir, tmp_path, capsys):
    # end-to-end across the external interface: aqdsim preset -> CSV -> image
    out = tmp_path / "fig4.png"
    code = main(["plot", "fig4",
                 "--csv-dir", str(real_fig4_dir), "--out", str(out)])
    assert code == 0
    assert out.is_file()
    assert out.stat().st_size > 10_000
