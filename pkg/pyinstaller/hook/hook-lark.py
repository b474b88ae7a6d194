from PyInstaller.utils.hooks import collect_data_files

# the congruence grammar imports common.lark from lark's bundled grammars
datas = collect_data_files('lark')
