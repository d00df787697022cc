from apps.core.forms.job_config_form import JobConfigForm
from apps.core.forms.matrix_form import MatrixForm
from apps.core.forms.mb_spec_form import MBSpecForm
from apps.core.forms.test_form_form import TestFormForm

__all__ = [
    "JobConfigForm",
    "MBSpecForm",
    "MatrixForm",
    "TestFormForm",
]
