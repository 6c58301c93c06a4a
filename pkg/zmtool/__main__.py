from zmtool.cli import run

run()
