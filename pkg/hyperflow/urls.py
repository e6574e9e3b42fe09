# This file is part of hyperflow.
#
# hyperflow is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# hyperflow is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License

from django.urls import path

from hyperflow.core.api import views as core_api_views

#
# REST API
#
urlpatterns = [
    path('api/v1/evaluate/', core_api_views.evaluate_program, name='api-evaluate'),
    path('api/v1/measure/', core_api_views.measure_program, name='api-measure'),
    path('api/v1/refine/', core_api_views.refine_programs, name='api-refine'),
]
