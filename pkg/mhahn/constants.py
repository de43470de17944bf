json_schema_version = 1
csv_header = ("table", "row", "column", "value")
threads_env_var = "MHAHN_THREADS"
approx_digits = 12
default_module_cutoff = 12
default_free_parameter = 1
rational_pattern = r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$"
cell_key_pattern = "%s:N=%02d:%s"
