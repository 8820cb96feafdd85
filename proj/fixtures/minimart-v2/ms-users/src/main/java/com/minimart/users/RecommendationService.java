package com.minimart.users;

import java.util.List;

import org.springframework.stereotype.Service;
import org.springframework.web.client.RestTemplate;

@Service
public class RecommendationService {

    private final RestTemplate restTemplate;

    public RecommendationService(RestTemplate restTemplate) {
        this.restTemplate = restTemplate;
    }

    @SuppressWarnings("unchecked")
    public List<Object> forUser(Integer userId) {
        return restTemplate.getForObject("http://ms-catalog/api/v1/catalog/products", List.class);
    }
}
